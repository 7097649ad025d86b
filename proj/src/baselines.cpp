#include "qosc/baselines.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qosc/quadrature.hpp"
#include "qosc/special_functions.hpp"

namespace qosc {

namespace {

// Width of e^{-beta V(x)}: radius where beta V = 45.
double classical_radius(double beta, const OscillatorParams& params) {
    const double w2 = params.omega * params.omega;
    if (params.g == 0.0) return std::sqrt(90.0 / (beta * w2));
    const double a = beta * params.g;
    const double b = 0.5 * beta * w2;
    return std::sqrt((std::sqrt(b * b + 180.0 * a) - b) / (2.0 * a));
}

}  // namespace

FkPointSolution fk_effective_potential(double x0, double beta, const OscillatorParams& params) {
    validate(params);
    if (!(beta > 0.0)) throw DomainError("fk_effective_potential: beta must be positive");
    const double w2 = params.omega * params.omega;
    const double g = params.g;

    const auto a2_of = [beta](double omega_loc) {
        return 0.25 * beta * coth_deficit(0.5 * omega_loc * beta);
    };

    double omega_loc = std::sqrt(w2 + 12.0 * g * x0 * x0);
    double a2 = 0.0;
    bool converged = false;
    for (int it = 0; it < 500; ++it) {
        a2 = a2_of(omega_loc);
        const double target = std::sqrt(w2 + 12.0 * g * (a2 + x0 * x0));
        const double delta = target - omega_loc;
        omega_loc += 0.5 * delta;
        if (std::abs(delta) <= 1e-12 * std::max(1.0, omega_loc)) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw SolverError("fk_effective_potential: width fixed point did not converge");
    }
    a2 = a2_of(omega_loc);

    const double z = 0.5 * omega_loc * beta;
    const double smeared = 0.5 * a2 * w2 + 3.0 * a2 * a2 * g +
                           0.5 * (w2 + 12.0 * a2 * g) * x0 * x0 + g * x0 * x0 * x0 * x0;
    const double w1 = log_sinhc(z) / beta - 0.5 * omega_loc * omega_loc * a2 + smeared;
    return FkPointSolution{x0, omega_loc, a2, w1};
}

ThermoPoint fk_partition(double beta, const OscillatorParams& params) {
    validate(params);
    if (!(beta > 0.0)) throw DomainError("fk_partition: beta must be positive");
    const double w1_center = fk_effective_potential(0.0, beta, params).w1;

    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.symmetry = Symmetry::even;
    spec.scale_hint = classical_radius(beta, params);
    spec.radius_multiplier = 1.3;
    const double integral = integrate_decaying(
        [beta, &params, w1_center](double x0) {
            return std::exp(-beta * (fk_effective_potential(x0, beta, params).w1 - w1_center));
        },
        spec);
    const double log_z = -0.5 * std::log(2.0 * pi * beta) - beta * w1_center + std::log(integral);
    return make_thermo_point(beta, log_z, Model::fk);
}

double fk_cubic_root(const OscillatorParams& params) {
    validate(params);
    const double w2 = params.omega * params.omega;
    const double g = params.g;
    const double w6 = w2 * w2 * w2;
    const double disc = 9.0 * g * g - w6 / 27.0;
    if (disc < 0.0) {
        // Three real roots; the largest is the positive one.
        const double phi = std::acos(9.0 * std::sqrt(3.0) * g / (params.omega * w2));
        return 2.0 * params.omega / std::sqrt(3.0) * std::cos(phi / 3.0);
    }
    const double root = std::sqrt(disc);
    return std::cbrt(3.0 * g + root) + std::cbrt(3.0 * g - root);
}

double fk_ground_energy(const OscillatorParams& params) {
    const double omega0 = fk_cubic_root(params);
    const double w2 = params.omega * params.omega;
    return 0.25 * omega0 + 0.25 * w2 / omega0 + 0.75 * params.g / (omega0 * omega0);
}

double fk_first_excited(const OscillatorParams& params, double beta_max) {
    validate(params);
    if (!(beta_max > 0.0)) throw DomainError("fk_first_excited: beta_max must be positive");
    const double e0 = fk_ground_energy(params);

    constexpr int kPoints = 6;
    constexpr int kMaxShrink = 4;
    double last_beta = beta_max;

    // When the excited-state signal e^{-beta gap} has sunk below the
    // integration noise floor of log_z at the largest sampling points, shrink
    // the window and retry rather than fitting noise.
    for (int attempt = 0; attempt < kMaxShrink; ++attempt) {
        const double window = beta_max / (1 << attempt);
        std::array<double, kPoints> betas{};
        for (int i = 0; i < kPoints; ++i) {
            betas[i] = window / 4.0 + (window - window / 4.0) * i / (kPoints - 1);
        }

        // Linear least squares for E1(beta) = a + b ln(beta)/beta + c/beta.
        double m[3][3] = {{0}};
        double rhs[3] = {0};
        int valid = 0;
        for (const double beta : betas) {
            const double log_z = fk_partition(beta, params).log_z;
            const double s_arg = beta * e0 + log_z;
            const double noise = 1e-11 * (1.0 + std::fabs(beta * e0) + std::fabs(log_z));
            if (!(s_arg > 50.0 * noise)) {
                last_beta = beta;
                continue;
            }
            const double shifted = std::expm1(s_arg);
            const double e1 = e0 - std::log(shifted) / beta;
            const double basis[3] = {1.0, std::log(beta) / beta, 1.0 / beta};
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) m[i][j] += basis[i] * basis[j];
                rhs[i] += basis[i] * e1;
            }
            ++valid;
        }
        if (valid < 3) continue;

        const auto det3 = [](const double a[3][3]) {
            return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                   a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        };
        const double det = det3(m);
        if (det == 0.0) throw SolverError("fk_first_excited: singular least-squares system");
        double m0[3][3];
        std::copy(&m[0][0], &m[0][0] + 9, &m0[0][0]);
        for (int i = 0; i < 3; ++i) m0[i][0] = rhs[i];
        return det3(m0) / det;
    }
    throw DegeneracyError("fk_first_excited: excited-state signal below the noise floor",
                          last_beta);
}

BfSolution bf_free_energy(double beta, const OscillatorParams& params) {
    validate(params);
    if (!(beta > 0.0)) throw DomainError("bf_free_energy: beta must be positive");
    const double w2 = params.omega * params.omega;
    const double g = params.g;

    double omega_tilde = params.omega;
    if (g > 0.0) {
        const auto f = [&](double w) {
            return w * w * w - w2 * w - 6.0 * g * coth(0.5 * w * beta);
        };
        double lo = params.omega;
        double hi = params.omega + 1.0;
        int doublings = 0;
        while (f(hi) < 0.0) {
            hi *= 2.0;
            if (++doublings > 200) {
                throw SolverError("bf_free_energy: failed to bracket the frequency root");
            }
        }
        for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            (f(mid) < 0.0 ? lo : hi) = mid;
        }
        omega_tilde = 0.5 * (lo + hi);
    }

    const double z = 0.5 * omega_tilde * beta;
    const double c = coth(z);
    const double f_value = log_two_sinh(z) / beta +
                           0.25 * (w2 - omega_tilde * omega_tilde) * c / omega_tilde +
                           0.75 * g * (c / omega_tilde) * (c / omega_tilde);
    return BfSolution{omega_tilde, f_value};
}

ThermoPoint bf_partition(double beta, const OscillatorParams& params) {
    const BfSolution sol = bf_free_energy(beta, params);
    return make_thermo_point(beta, -beta * sol.free_energy, Model::bf);
}

double fk_gap(double beta, const OscillatorParams& params) {
    if (!(beta > 0.0)) throw DomainError("fk_gap: beta must be positive");
    const double e0 = fk_ground_energy(params);
    const double log_z = fk_partition(beta, params).log_z;
    const double s_arg = beta * e0 + log_z;
    if (!(s_arg > 0.0)) {
        throw DegeneracyError("fk_gap: Z <= e^{-beta E0}", beta);
    }
    return -std::log(-std::expm1(-s_arg)) / beta;
}

double bf_gap(double beta, const OscillatorParams& params) {
    if (!(beta > 0.0)) throw DomainError("bf_gap: beta must be positive");
    const double e0 = fk_ground_energy(params);  // shared beta -> inf limit
    const double log_z = bf_partition(beta, params).log_z;
    const double s_arg = beta * e0 + log_z;
    // Below the cancellation noise floor of beta*e0 + log_z, use the analytic
    // limit: the subtracted weight approaches e^{-beta Omega0} exactly.
    const double noise = 1e-11 * (1.0 + std::abs(beta * e0) + std::abs(log_z));
    double s_eff = s_arg;
    if (s_arg < 50.0 * noise) {
        if (s_arg <= -50.0 * noise) {
            throw DegeneracyError("bf_gap: Z <= e^{-beta E0}", beta);
        }
        s_eff = std::exp(-beta * fk_cubic_root(params));
    }
    return -std::log(-std::expm1(-s_eff)) / beta;
}

double relative_error_percent(double f_model, double f_exact) {
    if (f_exact == 0.0) throw DomainError("relative_error_percent: zero reference");
    return 100.0 * (f_model - f_exact) / std::abs(f_exact);
}

}  // namespace qosc
