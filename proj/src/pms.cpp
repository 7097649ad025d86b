#include "qosc/pms.hpp"

#include <algorithm>
#include <cmath>

#include "qosc/effective_frequency.hpp"
#include "qosc/quadrature.hpp"
#include "qosc/special_functions.hpp"

namespace qosc {

namespace {

// Radius where tau V(x) = 45, so the integrand has decayed to ~e^{-45}.
double potential_decay_radius(double tau, const OscillatorParams& params) {
    const double w2 = params.omega * params.omega;
    if (params.g == 0.0) {
        return std::sqrt(90.0 / (tau * w2));
    }
    const double a = tau * params.g;
    const double b = 0.5 * tau * w2;
    const double x2 = (std::sqrt(b * b + 180.0 * a) - b) / (2.0 * a);
    return std::sqrt(x2);
}

}  // namespace

double i_v(double tau, const OscillatorParams& params, double rel_tol) {
    validate(params);
    if (!(tau > 0.0)) {
        throw DomainError("i_v: tau must be positive");
    }
    const double w2 = params.omega * params.omega;
    const double g = params.g;
    QuadratureSpec spec;
    spec.rel_tol = rel_tol;
    spec.symmetry = Symmetry::even;
    spec.scale_hint = potential_decay_radius(tau, params);
    spec.radius_multiplier = 1.3;
    return integrate_decaying(
        [w2, g, tau](double x) {
            const double x2 = x * x;
            return std::exp(-tau * (0.5 * w2 * x2 + g * x2 * x2));
        },
        spec);
}

double c_of_tau(double tau, const OscillatorParams& params) {
    const double wg = omega_g(tau, params);
    return wg * std::sqrt(tau) * i_v(tau, params) / std::sqrt(2.0 * pi);
}

double log_zn_gaussian(double n, double beta, double omega_g_value,
                       const OscillatorParams& params) {
    validate(params);
    if (!(n > 0.0) || !(beta > 0.0) || !(omega_g_value > 0.0)) {
        throw DomainError("log_zn_gaussian: n, beta and omega_g must be positive");
    }
    const double tau = beta / n;
    const double c = omega_g_value * std::sqrt(tau) * i_v(tau, params) / std::sqrt(2.0 * pi);
    return n * std::log(c) - log_two_sinh(0.5 * beta * omega_g_value);
}

double zn_gaussian(double n, double beta, double omega_g_value, const OscillatorParams& params) {
    return std::exp(log_zn_gaussian(n, beta, omega_g_value, params));
}

PmsSolution solve_pms(double beta, const OscillatorParams& params, double tol) {
    validate(params);
    if (!(beta > 0.0)) {
        throw DomainError("solve_pms: beta must be positive");
    }
    if (!(tol > 0.0)) {
        throw DomainError("solve_pms: tol must be positive");
    }

    // n = z coth(z) with z = beta omega_g(beta/n) / 2.
    double wg_last = params.omega;
    const auto rhs = [&](double n) {
        wg_last = omega_g(beta / n, params);
        const double z = 0.5 * beta * wg_last;
        return z * coth(z);
    };

    double n = std::max(1.0, 0.5 * beta * params.omega);
    double prev_delta = 0.0;
    bool damped = false;
    for (int it = 1; it <= 200; ++it) {
        const double target = rhs(n);
        const double delta = target - n;
        if (std::abs(delta) <= tol * n) {
            return PmsSolution{beta, n, beta / n, wg_last, it, std::abs(delta)};
        }
        if (delta * prev_delta < 0.0) {
            damped = true;  // the plain iteration oscillates; average from here on
        }
        n += damped ? 0.5 * delta : delta;
        prev_delta = delta;
    }

    // Fallback: bisection on h(n) = rhs(n) - n. h(0+) > 0 since rhs >= 1, and
    // rhs grows only like n^{1/4} for large n, so a sign change always exists.
    double lo = 1e-8;
    double hi = std::max(2.0, 2.0 * n);
    int doublings = 0;
    while (rhs(hi) > hi) {
        hi *= 2.0;
        if (++doublings > 100) {
            throw SolverError("solve_pms: failed to bracket the self-consistency root");
        }
    }
    int iterations = 200 + doublings;
    while (hi - lo > tol * lo) {
        const double mid = 0.5 * (lo + hi);
        ++iterations;
        if (rhs(mid) > mid) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (iterations > 2000) {
            throw SolverError("solve_pms: bisection failed to converge");
        }
    }
    n = 0.5 * (lo + hi);
    const double residual = std::abs(rhs(n) - n);
    if (residual > std::max(tol * n, 1e-9 * n)) {
        throw SolverError("solve_pms: residual above tolerance after bisection");
    }
    return PmsSolution{beta, n, beta / n, wg_last, iterations, residual};
}

ThermoPoint partition_function(double beta, const OscillatorParams& params, double solver_tol) {
    const PmsSolution sol = solve_pms(beta, params, solver_tol);
    const double log_z = log_zn_gaussian(sol.n_c, beta, sol.omega_g_star, params);
    return make_thermo_point(beta, log_z, Model::pms);
}

ThermoPoint classical_partition(double beta, const OscillatorParams& params, double rel_tol) {
    validate(params);
    if (!(beta > 0.0)) {
        throw DomainError("classical_partition: beta must be positive");
    }
    const double log_z = std::log(i_v(beta, params, rel_tol)) - 0.5 * std::log(2.0 * pi * beta);
    return make_thermo_point(beta, log_z, Model::classical);
}

double harmonic_log_partition(double beta, double omega) {
    if (!(beta > 0.0) || !(omega > 0.0)) {
        throw DomainError("harmonic_log_partition: beta and omega must be positive");
    }
    return -log_two_sinh(0.5 * beta * omega);
}

}  // namespace qosc
