#include "qosc/effective_frequency.hpp"

#include <cmath>

#include "qosc/quadrature.hpp"
#include "qosc/special_functions.hpp"

namespace qosc {

namespace {

// Crossover above which the moment integrands become stiff and the asymptotic
// expansion is already accurate to better than 1e-11.
constexpr double kAsymptoticThreshold = 1e6;

// Largest Bessel argument before e^{-z} reaches the subnormal range.
constexpr double kMaxBesselArg = 690.0;

// Radius where y^2 + x y^4 = 45, so the integrand tail is below e^{-45}.
double moment_scale(double x) {
    if (x == 0.0) return std::sqrt(45.0);
    return std::sqrt((std::sqrt(1.0 + 180.0 * x) - 1.0) / (2.0 * x));
}

double b_quadrature(double x) {
    return moment_integral(0, x) / (2.0 * moment_integral(2, x));
}

double b_bessel(double x) {
    const double z = 1.0 / (8.0 * x);
    if (z > kMaxBesselArg)
        throw DomainError("Bessel path underflows for x below ~1.8e-4");
    const double k14 = bessel_k(0.25, z);
    const double k34 = bessel_k(0.75, z);
    const double k54 = bessel_k(1.25, z);
    return 4.0 * x * k14 / (k34 + k54 - 2.0 * (1.0 + 2.0 * x) * k14);
}

double b_asymptotic(double x) {
    const BAsymptoticCoefficients c = b_asymptotic_coefficients();
    const double s = std::sqrt(x);
    return s * c.b0 + c.b1 + c.b2 / s;
}

}  // namespace

BAsymptoticCoefficients b_asymptotic_coefficients() {
    const double g34 = gamma(0.75);
    const double g54 = gamma(1.25);
    const double g74 = gamma(1.75);
    const double b0 = 2.0 * g54 / g34;
    const double b1 = (4.0 * g54 * g54 - g34 * g34) / (2.0 * g34 * g34);
    const double b2 =
        -g54 * (g34 * g34 - 8.0 * g54 * g54 + 4.0 * g34 * g74) / (4.0 * g34 * g34 * g34);
    return BAsymptoticCoefficients{b0, b1, b2};
}

double moment_integral(int k, double x) {
    if (k < 0 || k % 2 != 0) throw DomainError("moment_integral requires even k >= 0");
    if (x < 0.0) throw DomainError("moment_integral requires x >= 0");
    if (x == 0.0) return gamma((k + 1) / 2.0);
    QuadratureSpec spec;
    spec.rel_tol = 1e-13;
    spec.scale_hint = moment_scale(x);
    spec.radius_multiplier = 1.3;
    spec.symmetry = Symmetry::even;
    return integrate_decaying(
        [k, x](double y) { return std::pow(y, k) * std::exp(-y * y - x * y * y * y * y); },
        spec);
}

double b_function(double x, BMethod method) {
    if (x < 0.0) throw DomainError("b_function requires x >= 0");
    if (x == 0.0) return 1.0;
    switch (method) {
        case BMethod::automatic:
            return x > kAsymptoticThreshold ? b_asymptotic(x) : b_quadrature(x);
        case BMethod::quadrature:
            return b_quadrature(x);
        case BMethod::bessel:
            return b_bessel(x);
        case BMethod::asymptotic:
            return b_asymptotic(x);
    }
    throw DomainError("unknown B evaluation method");
}

double b_derivative(double x) {
    if (x < 0.0) throw DomainError("b_derivative requires x >= 0");
    if (x > kAsymptoticThreshold) {
        const BAsymptoticCoefficients c = b_asymptotic_coefficients();
        const double s = std::sqrt(x);
        return c.b0 / (2.0 * s) - c.b2 / (2.0 * x * s);
    }
    const double m0 = moment_integral(0, x);
    const double m2 = moment_integral(2, x);
    const double m4 = moment_integral(4, x);
    const double m6 = moment_integral(6, x);
    return (m0 * m6 - m2 * m4) / (2.0 * m2 * m2);
}

BEvaluation evaluate_b(double x, BMethod method) {
    if (method == BMethod::automatic)
        method = x > kAsymptoticThreshold ? BMethod::asymptotic : BMethod::quadrature;
    return BEvaluation{x, b_function(x, method), b_derivative(x), method};
}

double omega_g(double tau, const OscillatorParams& params) {
    validate(params);
    if (!(tau > 0.0)) throw DomainError("omega_g requires tau > 0");
    const double w = params.omega;
    return w * std::sqrt(b_function(4.0 * params.g / (tau * w * w * w * w)));
}

}  // namespace qosc
