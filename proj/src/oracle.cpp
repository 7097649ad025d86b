#include "qosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qosc {

namespace {

constexpr double kMinBeta = 0.05;
constexpr double kTailRelTol = 1e-12;

void validate_basis(const BasisSpec& basis) {
    if (basis.size < 10) throw DomainError("basis size must be at least 10");
    if (basis.convergence_digits < 1) throw DomainError("convergence_digits must be positive");
}

std::vector<double> eigenvalues_of(const Eigen::MatrixXd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw SolverError("symmetric eigensolver failed to converge");
    }
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

// ln sum_{k >= start} e^{-beta E_k}, certified so the omitted tail is below
// kTailRelTol relative. Prefers the converged prefix; falls back to the full
// basis trace when the prefix ends too low for the requested beta.
double log_boltzmann_sum(double beta, const ExactSpectrum& spectrum, int start) {
    const auto& e = spectrum.energies;
    const int n = static_cast<int>(e.size());
    if (start + 2 > n) throw DomainError("spectrum too short for Boltzmann sum");

    const auto partial = [&](int stop) {
        const double m = -beta * e[start];
        double acc = 0.0;
        for (int k = start; k < stop; ++k) acc += std::exp(-beta * e[k] - m);
        return m + std::log(acc);
    };
    // Geometric tail bound from the last retained spacing; spacings grow with
    // level, so continuing the last one overestimates the true tail.
    const auto tail_ok = [&](double b, int stop) {
        const double spacing = e[stop - 1] - e[stop - 2];
        if (!(spacing > 0.0)) return false;
        const double log_tail =
            -b * e[stop - 1] - b * spacing - std::log1p(-std::exp(-b * spacing));
        const double m = -b * e[start];
        double acc = 0.0;
        for (int k = start; k < stop; ++k) acc += std::exp(-b * e[k] - m);
        const double log_sum = m + std::log(acc);
        return log_tail <= log_sum + std::log(kTailRelTol);
    };

    const int cc = std::max(spectrum.converged_count, 0);
    if (cc - start >= 2 && tail_ok(beta, cc)) return partial(cc);
    if (tail_ok(beta, n)) return partial(n);

    // Report the smallest certifiable beta.
    double hi = std::max(2.0 * beta, 1.0);
    int guard = 0;
    while (!tail_ok(hi, n) && ++guard < 60) hi *= 2.0;
    double lo = beta;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (tail_ok(mid, n) ? hi : lo) = mid;
    }
    throw ValidityError("Boltzmann-sum tail exceeds tolerance at this beta", hi);
}

}  // namespace

double resolve_basis_frequency(const OscillatorParams& params, const BasisSpec& basis) {
    if (basis.basis_frequency > 0.0) return basis.basis_frequency;
    return omega_bar(params);
}

Eigen::MatrixXd build_hamiltonian(const OscillatorParams& params, const BasisSpec& basis) {
    validate(params);
    validate_basis(basis);
    const int n = basis.size;
    const double w = resolve_basis_frequency(params, basis);
    const double w2 = params.omega * params.omega;
    const double g = params.g;
    const double inv_w2 = 1.0 / (w * w);

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double dk = static_cast<double>(k);
        h(k, k) = 0.25 * (w + w2 / w) * (2.0 * dk + 1.0) +
                  0.75 * g * inv_w2 * (2.0 * dk * dk + 2.0 * dk + 1.0);
        if (k + 2 < n) {
            const double s2 = std::sqrt((dk + 1.0) * (dk + 2.0));
            const double v = 0.25 * (w2 / w - w) * s2 + 0.25 * g * inv_w2 * (4.0 * dk + 6.0) * s2;
            h(k, k + 2) = v;
            h(k + 2, k) = v;
        }
        if (k + 4 < n) {
            const double s4 =
                std::sqrt((dk + 1.0) * (dk + 2.0) * (dk + 3.0) * (dk + 4.0));
            const double v = 0.25 * g * inv_w2 * s4;
            h(k, k + 4) = v;
            h(k + 4, k) = v;
        }
    }
    return h;
}

ExactSpectrum exact_spectrum(const OscillatorParams& params, const BasisSpec& basis) {
    validate(params);
    validate_basis(basis);
    const Eigen::MatrixXd h = build_hamiltonian(params, basis);
    const std::vector<double> full = eigenvalues_of(h);
    const int half_size = basis.size / 2;
    const std::vector<double> half = eigenvalues_of(h.topLeftCorner(half_size, half_size));

    const double tol = std::pow(10.0, -basis.convergence_digits);
    int converged = 0;
    while (converged < half_size &&
           std::abs(full[converged] - half[converged]) <=
               tol * std::max(1.0, std::abs(full[converged]))) {
        ++converged;
    }
    return ExactSpectrum{full, converged};
}

ThermoPoint exact_partition(double beta, const ExactSpectrum& spectrum) {
    if (!(beta > 0.0)) throw DomainError("exact_partition: beta must be positive");
    if (beta < kMinBeta) {
        throw ValidityError("exact_partition: beta below the truncation validity floor", kMinBeta);
    }
    return make_thermo_point(beta, log_boltzmann_sum(beta, spectrum, 0), Model::exact);
}

FiniteTemperatureEnergies exact_finite_temperature_energies(double beta,
                                                            const ExactSpectrum& spectrum) {
    if (!(beta > 0.0)) {
        throw DomainError("exact_finite_temperature_energies: beta must be positive");
    }
    if (beta < kMinBeta) {
        throw ValidityError("exact_finite_temperature_energies: beta below validity floor",
                            kMinBeta);
    }
    const double e0_beta = -log_boltzmann_sum(beta, spectrum, 0) / beta;
    const double e1_beta = -log_boltzmann_sum(beta, spectrum, 1) / beta;
    return FiniteTemperatureEnergies{e0_beta, e1_beta, e1_beta - e0_beta};
}

std::pair<std::vector<double>, std::vector<double>> parity_block_energies(
    const OscillatorParams& params, const BasisSpec& basis) {
    const Eigen::MatrixXd h = build_hamiltonian(params, basis);
    const int n = basis.size;
    const int n_even = (n + 1) / 2;
    const int n_odd = n / 2;
    Eigen::MatrixXd even = Eigen::MatrixXd::Zero(n_even, n_even);
    Eigen::MatrixXd odd = Eigen::MatrixXd::Zero(n_odd, n_odd);
    for (int i = 0; i < n_even; ++i) {
        for (int j = 0; j < n_even; ++j) even(i, j) = h(2 * i, 2 * j);
    }
    for (int i = 0; i < n_odd; ++i) {
        for (int j = 0; j < n_odd; ++j) odd(i, j) = h(2 * i + 1, 2 * j + 1);
    }
    return {eigenvalues_of(even), eigenvalues_of(odd)};
}

void save_spectrum(const std::string& path, const ExactSpectrum& spectrum,
                   const OscillatorParams& params, const BasisSpec& basis) {
    std::ofstream out(path);
    if (!out) throw SolverError("save_spectrum: cannot open " + path);
    char line[256];
    std::snprintf(line, sizeof line,
                  "# omega=%.17g g=%.17g size=%d basis_frequency=%.17g converged_count=%d\n",
                  params.omega, params.g, basis.size, resolve_basis_frequency(params, basis),
                  spectrum.converged_count);
    out << line;
    for (size_t k = 0; k < spectrum.energies.size(); ++k) {
        std::snprintf(line, sizeof line, "%zu %.17g\n", k, spectrum.energies[k]);
        out << line;
    }
    if (!out) throw SolverError("save_spectrum: write failed for " + path);
}

LoadedSpectrum load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SolverError("load_spectrum: cannot open " + path);
    std::string header;
    std::getline(in, header);
    LoadedSpectrum result;
    int size = 0;
    if (std::sscanf(header.c_str(),
                    "# omega=%lf g=%lf size=%d basis_frequency=%lf converged_count=%d",
                    &result.params.omega, &result.params.g, &size,
                    &result.basis.basis_frequency, &result.spectrum.converged_count) != 5) {
        throw SolverError("load_spectrum: malformed header in " + path);
    }
    result.basis.size = size;
    size_t index = 0;
    double energy = 0.0;
    std::string row;
    while (std::getline(in, row)) {
        if (row.empty()) continue;
        if (std::sscanf(row.c_str(), "%zu %lf", &index, &energy) != 2) {
            throw SolverError("load_spectrum: malformed row in " + path);
        }
        result.spectrum.energies.push_back(energy);
    }
    if (static_cast<int>(result.spectrum.energies.size()) != size) {
        throw SolverError("load_spectrum: row count does not match header size");
    }
    return result;
}

}  // namespace qosc
