#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "qosc/spectrum.hpp"
#include "qosc/types.hpp"

namespace qosc {

struct BasisSpec {
    // Large enough that at beta = 0.1 the variational bias of the unconverged
    // levels (which still carry Boltzmann weight there) stays below 1e-12 of
    // ln Z for the bundled comparison grid.
    int size = 300;
    // Frequency of the harmonic-oscillator basis; values <= 0 select the
    // self-consistent omega_bar of the target parameters.
    double basis_frequency = 0.0;
    int convergence_digits = 10;
};

struct ExactSpectrum {
    std::vector<double> energies;  // ascending
    int converged_count = 0;       // leading eigenvalues stable between N/2 and N
};

double resolve_basis_frequency(const OscillatorParams& params, const BasisSpec& basis);

// Real symmetric N x N matrix of H = p^2/2 + omega^2 x^2/2 + g x^4 in the
// basis of harmonic-oscillator eigenfunctions of frequency basis_frequency.
// Banded: couplings only on the diagonal and at offsets 2 and 4.
Eigen::MatrixXd build_hamiltonian(const OscillatorParams& params, const BasisSpec& basis);

ExactSpectrum exact_spectrum(const OscillatorParams& params, const BasisSpec& basis = {});

// Z = sum of Boltzmann weights with a bound on the truncated tail; refuses
// beta where the tail cannot be certified below 1e-12 relative.
ThermoPoint exact_partition(double beta, const ExactSpectrum& spectrum);

// Reference finite-temperature estimators mirroring the model's definitions:
// e0_beta = -ln Z / beta, e1_beta = -(1/beta) ln(sum over excited states).
FiniteTemperatureEnergies exact_finite_temperature_energies(double beta,
                                                            const ExactSpectrum& spectrum);

// Independent diagonalizations of the decoupled even/odd parity blocks.
std::pair<std::vector<double>, std::vector<double>> parity_block_energies(
    const OscillatorParams& params, const BasisSpec& basis = {});

struct LoadedSpectrum {
    ExactSpectrum spectrum;
    OscillatorParams params;
    BasisSpec basis;
};

void save_spectrum(const std::string& path, const ExactSpectrum& spectrum,
                   const OscillatorParams& params, const BasisSpec& basis);
LoadedSpectrum load_spectrum(const std::string& path);

}  // namespace qosc
