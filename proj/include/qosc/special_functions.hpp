#pragma once

#include "qosc/rational.hpp"
#include "qosc/types.hpp"

namespace qosc {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double sqrt_pi = 1.77245385090551602730;

// Gamma(x) for x > -1 excluding the pole at 0; the (-1, 0) branch uses the
// recurrence Gamma(x) = Gamma(x + 1)/x.
double gamma(double x);

// Modified Bessel function of the second kind, fractional order, x > 0.
// Satisfies K_{-nu} = K_{nu}.
double bessel_k(double nu, double x);

// Rational part of the Gaussian moment: integral of x^{4n} e^{-x^2} over the
// real line equals gaussian_moment_4n(n) * sqrt(pi), value (4n-1)!!/2^{2n}.
BigRational gaussian_moment_4n(int n);

}  // namespace qosc
