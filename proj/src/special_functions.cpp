#include "qosc/special_functions.hpp"

#include <cmath>

#include "qosc/quadrature.hpp"

namespace qosc {

double gamma(double x) {
    if (x == 0.0 || x <= -1.0) throw DomainError("gamma supports x > -1 excluding 0");
    if (x < 0.0) return std::tgamma(x + 1.0) / x;
    return std::tgamma(x);
}

namespace {

// Ascending series I_nu(x) = sum_k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)); the
// term ratio handles the sign of Gamma at negative arguments automatically.
double bessel_i_series(double nu, double x) {
    const double half = 0.5 * x;
    double term = std::pow(half, nu) / gamma(nu + 1.0);
    double sum = term;
    for (int k = 0; k < 200; ++k) {
        term *= half * half / ((k + 1.0) * (k + 1.0 + nu));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
    }
    throw AccuracyError("Bessel I series did not converge", sum);
}

}  // namespace

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k requires x > 0");
    const double anu = std::abs(nu);
    if (x >= 0.05) {
        // K_nu(x) = integral over t >= 0 of e^{-x cosh t} cosh(nu t).
        QuadratureSpec spec;
        spec.rel_tol = 1e-14;
        spec.max_refinements = 4000;
        spec.scale_hint = std::acosh(1.0 + 45.0 / x);
        spec.radius_multiplier = 1.5;
        return integrate_half_line(
            [x, anu](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(anu * t); },
            spec);
    }
    // Small x: K_nu = (pi/2)(I_{-nu} - I_nu)/sin(nu pi), valid away from
    // integer orders (only quarter-integer orders are used here).
    const double s = std::sin(anu * pi);
    if (std::abs(s) < 1e-8)
        throw DomainError("bessel_k small-x series requires non-integer order");
    return 0.5 * pi * (bessel_i_series(-anu, x) - bessel_i_series(anu, x)) / s;
}

BigRational gaussian_moment_4n(int n) {
    if (n < 0) throw DomainError("gaussian_moment_4n requires n >= 0");
    BigInt den = 1;
    den <<= 2 * n;
    return BigRational(double_factorial(4L * n - 1), den);
}

}  // namespace qosc
