#pragma once

#include "qosc/types.hpp"

namespace qosc {

// Minimal-sensitivity point: n_c solves n = (beta omega_g(beta/n)/2) coth(...).
struct PmsSolution {
    double beta;
    double n_c;           // generally non-integer
    double tau_c;         // beta / n_c
    double omega_g_star;  // omega_g(tau_c)
    int iterations;
    double residual;      // |n_c - rhs(n_c)|
};

// I_v(tau) = integral of e^{-tau V(x)} over the real line.
double i_v(double tau, const OscillatorParams& params, double rel_tol = 1e-12);

// C(tau) = omega_g(tau) sqrt(tau) I_v(tau) / sqrt(2 pi); equals 1 at g = 0 and
// tends to a universal constant ~1.24397 as tau -> 0 for g > 0.
double c_of_tau(double tau, const OscillatorParams& params);

// ln Z_n for the gaussian approximation with a freely chosen omega_g:
// n ln C - ln(2 sinh(beta omega_g / 2)), with C evaluated at tau = beta/n.
double log_zn_gaussian(double n, double beta, double omega_g_value,
                       const OscillatorParams& params);
double zn_gaussian(double n, double beta, double omega_g_value, const OscillatorParams& params);

PmsSolution solve_pms(double beta, const OscillatorParams& params, double tol = 1e-12);

// Model partition function Z = C(tau_c)^{n_c} / (2 sinh(beta omega_g*/2)).
ThermoPoint partition_function(double beta, const OscillatorParams& params,
                               double solver_tol = 1e-12);

// Classical limit Z_cl = (1/sqrt(2 pi beta)) integral of e^{-beta V}.
ThermoPoint classical_partition(double beta, const OscillatorParams& params,
                                double rel_tol = 1e-12);

// ln of the harmonic partition function 1 / (2 sinh(beta omega / 2)).
double harmonic_log_partition(double beta, double omega);

}  // namespace qosc
