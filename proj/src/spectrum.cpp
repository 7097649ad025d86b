#include "qosc/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "qosc/effective_frequency.hpp"
#include "qosc/pms.hpp"
#include "qosc/quadrature.hpp"
#include "qosc/special_functions.hpp"

namespace qosc {

namespace {

// Argument of B in the self-consistency condition.
double b_argument(double w_bar, const OscillatorParams& params) {
    const double w2 = params.omega * params.omega;
    return 2.0 * params.g * w_bar / (w2 * w2);
}

double self_consistency_map(double w_bar, const OscillatorParams& params) {
    return params.omega * std::sqrt(b_function(b_argument(w_bar, params)));
}

// Integral of weight(x) e^{-2 V(x) / w_bar} over the real line.
double weighted_integral(const OscillatorParams& params, double w_bar, bool with_potential,
                         double rel_tol) {
    const double w2 = params.omega * params.omega;
    const double g = params.g;
    const double tau = 2.0 / w_bar;
    QuadratureSpec spec;
    spec.rel_tol = rel_tol;
    spec.symmetry = Symmetry::even;
    spec.radius_multiplier = 1.3;
    // Radius where tau V = 45.
    if (g == 0.0) {
        spec.scale_hint = std::sqrt(90.0 / (tau * w2));
    } else {
        const double a = tau * g;
        const double b = 0.5 * tau * w2;
        spec.scale_hint = std::sqrt((std::sqrt(b * b + 180.0 * a) - b) / (2.0 * a));
    }
    return integrate_decaying(
        [w2, g, tau, with_potential](double x) {
            const double x2 = x * x;
            const double v = 0.5 * w2 * x2 + g * x2 * x2;
            const double w = std::exp(-tau * v);
            return with_potential ? v * w : w;
        },
        spec);
}

}  // namespace

double omega_bar(const OscillatorParams& params, double tol) {
    validate(params);
    if (!(tol > 0.0)) {
        throw DomainError("omega_bar: tol must be positive");
    }
    if (params.g == 0.0) {
        return params.omega;
    }

    double w = params.omega;
    double prev_delta = 0.0;
    bool damped = false;
    for (int it = 0; it < 200; ++it) {
        const double target = self_consistency_map(w, params);
        const double delta = target - w;
        if (std::abs(delta) <= tol * w) {
            return w;
        }
        if (delta * prev_delta < 0.0) {
            damped = true;
        }
        w += damped ? 0.5 * delta : delta;
        prev_delta = delta;
    }

    // Bisection fallback on h(w) = map(w) - w, decreasing through the root.
    double lo = params.omega;
    double hi = params.omega * (1.0 + 10.0 * std::cbrt(2.0 * params.g));
    int doublings = 0;
    while (self_consistency_map(hi, params) > hi) {
        hi *= 2.0;
        if (++doublings > 100) {
            throw SolverError("omega_bar: failed to bracket the self-consistency root");
        }
    }
    for (int it = 0; it < 2000 && hi - lo > tol * lo; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (self_consistency_map(mid, params) > mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    w = 0.5 * (lo + hi);
    if (std::abs(self_consistency_map(w, params) - w) > std::max(tol, 1e-9) * w) {
        throw SolverError("omega_bar: residual above tolerance after bisection");
    }
    return w;
}

double ground_energy(const OscillatorParams& params) {
    const double w_bar = omega_bar(params);
    const double i_bar = weighted_integral(params, w_bar, false, 1e-11);
    return 0.5 * w_bar * (1.0 - std::log(std::sqrt(w_bar / pi) * i_bar));
}

SpectralSummary gap_quantities(const OscillatorParams& params) {
    const double w_bar = omega_bar(params);
    const double i_bar = weighted_integral(params, w_bar, false, 1e-11);
    const double v_bar = weighted_integral(params, w_bar, true, 1e-11);
    const double log_term = std::log(std::sqrt(w_bar / pi) * i_bar);
    const double e0 = 0.5 * w_bar * (1.0 - log_term);

    const double w2 = params.omega * params.omega;
    const double u_g = params.g / w2 * b_derivative(b_argument(w_bar, params));
    const double denom = 1.0 - u_g / w_bar;
    if (!(denom > 0.0)) {
        throw DegeneracyError("gap_quantities: c_bar pole (u_g reached omega_bar)", u_g);
    }
    const double c_bar = 2.0 * u_g / denom;
    const double delta =
        (1.0 + 0.5 * c_bar / w_bar) * (1.0 - 4.0 * v_bar / (w_bar * i_bar) - 2.0 * log_term);
    const double e1 = e0 + w_bar + delta;
    return SpectralSummary{params.g, w_bar, e0, delta, c_bar, u_g, e1, i_bar, v_bar};
}

FiniteTemperatureEnergies finite_temperature_energies(double beta, const OscillatorParams& params) {
    validate(params);
    if (!(beta > 0.0)) {
        throw DomainError("finite_temperature_energies: beta must be positive");
    }
    const SpectralSummary s = gap_quantities(params);
    const ThermoPoint tp = partition_function(beta, params);

    // Z_s = Z + e^{-beta(e0+omega_bar)} [e^{-beta delta} - (1 - beta delta)],
    // accumulated as a relative correction to stay accurate when Z is tiny.
    const double bd = beta * s.delta;
    const double correction =
        std::exp(-beta * (s.e0 + s.omega_bar) - tp.log_z) * (std::expm1(-bd) + bd);
    const double log_zs = tp.log_z + std::log1p(correction);
    const double e0_beta = -log_zs / beta;

    // gap_beta = -(1/beta) ln(1 - e^{-s_arg}), s_arg = ln(Z_s e^{beta E0}).
    // Below the cancellation noise floor of s_arg, switch to the exact
    // asymptotic weight e^{-beta(omega_bar+delta)} that s_arg approaches.
    const double s_arg = beta * s.e0 + log_zs;
    const double noise = 1e-11 * (1.0 + std::abs(beta * s.e0) + std::abs(log_zs));
    double s_eff = s_arg;
    if (s_arg < 50.0 * noise) {
        if (s_arg <= -50.0 * noise) {
            throw DegeneracyError("finite_temperature_energies: Z_s <= e^{-beta E0}", beta);
        }
        s_eff = std::exp(-beta * (s.omega_bar + s.delta));
    }
    const double gap_beta = -std::log(-std::expm1(-s_eff)) / beta;
    return FiniteTemperatureEnergies{e0_beta, e0_beta + gap_beta, gap_beta};
}

}  // namespace qosc
