#pragma once

#include "qosc/types.hpp"

namespace qosc {

// Low-temperature spectral quantities of the model at fixed coupling.
struct SpectralSummary {
    double g;
    double omega_bar;  // solves omega_bar = omega sqrt(B(2 g omega_bar / omega^4))
    double e0;         // ground energy
    double delta;      // anharmonic gap correction
    double c_bar;      // 2 u_g / (1 - u_g / omega_bar)
    double u_g;        // (g / omega^2) B'(2 g omega_bar / omega^4)
    double e1;         // e0 + omega_bar + delta
    double i_bar;      // integral of e^{-2 V / omega_bar}
    double v_bar;      // integral of V e^{-2 V / omega_bar}
};

struct FiniteTemperatureEnergies {
    double e0_beta;
    double e1_beta;
    double gap_beta;
};

// Self-consistent low-temperature frequency; equals omega at g = 0.
double omega_bar(const OscillatorParams& params, double tol = 1e-12);

// E0 = (omega_bar/2) [1 - ln(sqrt(omega_bar/pi) I_bar)].
double ground_energy(const OscillatorParams& params);

SpectralSummary gap_quantities(const OscillatorParams& params);

// Temperature-dependent estimators built on the stabilized partition function
// Z_s = Z + e^{-beta(E0+omega_bar)} [e^{-beta delta} - (1 - beta delta)]:
//   e0_beta = -ln Z_s / beta,
//   e1_beta = -(1/beta) ln(Z_s - e^{-beta E0}),   E0 = ground_energy(params),
//   gap_beta = e1_beta - e0_beta  ->  omega_bar + delta as beta -> infinity.
FiniteTemperatureEnergies finite_temperature_energies(double beta, const OscillatorParams& params);

}  // namespace qosc
