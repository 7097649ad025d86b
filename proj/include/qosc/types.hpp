#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace qosc {

// Oscillator potential V(x) = omega^2 x^2 / 2 + g x^4, units hbar = m = 1.
struct OscillatorParams {
    double omega = 1.0;
    double g = 0.0;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature failed to reach the requested tolerance; carries the best estimate.
struct AccuracyError : std::runtime_error {
    AccuracyError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
    double best_estimate;
};

// Requested beta is below the range where the truncated spectrum is trustworthy.
struct ValidityError : std::runtime_error {
    ValidityError(const std::string& what, double min_beta_)
        : std::runtime_error(what), min_beta(min_beta_) {}
    double min_beta;
};

// A subtracted Boltzmann weight became non-positive (levels numerically degenerate).
struct DegeneracyError : std::runtime_error {
    DegeneracyError(const std::string& what, double where_)
        : std::runtime_error(what), where(where_) {}
    double where;
};

inline void validate(const OscillatorParams& p) {
    if (!(p.omega > 0.0)) throw DomainError("omega must be positive");
    if (!(p.g >= 0.0)) throw DomainError("g must be non-negative");
}

enum class Model { pms, fk, bf, exact, classical, harmonic };

inline std::string to_string(Model m) {
    switch (m) {
        case Model::pms: return "pms";
        case Model::fk: return "fk";
        case Model::bf: return "bf";
        case Model::exact: return "exact";
        case Model::classical: return "classical";
        case Model::harmonic: return "harmonic";
    }
    throw DomainError("unknown model");
}

struct ThermoPoint {
    double beta;
    double log_z;
    double z;
    double free_energy;
    Model model;
};

inline ThermoPoint make_thermo_point(double beta, double log_z, Model model) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    return ThermoPoint{beta, log_z, std::exp(log_z), -log_z / beta, model};
}

// log(2 sinh(z)) for z > 0 without overflow.
inline double log_two_sinh(double z) {
    return z + std::log1p(-std::exp(-2.0 * z));
}

// log(sinh(z)/z) for z >= 0, stable at both ends.
inline double log_sinhc(double z) {
    if (z < 1e-4) {
        const double z2 = z * z;
        return z2 / 6.0 - z2 * z2 / 180.0;
    }
    return z + std::log1p(-std::exp(-2.0 * z)) - std::log(2.0 * z);
}

// coth(z) for z > 0, stable for tiny and huge arguments.
inline double coth(double z) {
    if (z > 20.0) return 1.0;
    if (z < 1e-4) return 1.0 / z + z / 3.0 - z * z * z / 45.0;
    return 1.0 / std::tanh(z);
}

// (z coth z - 1)/z^2 for z >= 0; finite limit 1/3 at z = 0.
inline double coth_deficit(double z) {
    if (z < 1e-3) {
        const double z2 = z * z;
        return 1.0 / 3.0 - z2 / 45.0 + 2.0 * z2 * z2 / 945.0;
    }
    return (z * coth(z) - 1.0) / (z * z);
}

}  // namespace qosc
