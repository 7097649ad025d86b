#pragma once

#include <array>
#include <vector>

#include "qosc/rational.hpp"
#include "qosc/types.hpp"

namespace qosc {

// Truncated formal power series with exact rational coefficients;
// coefficients[k] multiplies g^k, size is order + 1.
struct RationalSeries {
    std::vector<BigRational> coefficients;
    int order = 0;
};

RationalSeries make_series(int order);

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_scale(const BigRational& c, const RationalSeries& a);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);
// 1/a; requires nonzero constant term.
RationalSeries series_inverse(const RationalSeries& a);
// log(a); requires constant term 1.
RationalSeries series_log(const RationalSeries& a);
// sqrt(a); requires the constant term to be the square of a rational.
RationalSeries series_sqrt(const RationalSeries& a);
// a(b(g)); requires b to have zero constant term.
RationalSeries series_compose(const RationalSeries& a, const RationalSeries& b);
// a evaluated at a scalar, as an order-0 series.
RationalSeries series_compose(const RationalSeries& a, const BigRational& value);
BigRational series_eval(const RationalSeries& a, const BigRational& value);

// Taylor coefficients of the variance-ratio function B at 0:
// 1 + 3x - 15x^2 + 180x^3 - ... from Gaussian-moment ratios.
RationalSeries b_taylor(int order);

// Ground-energy expansion E0(g) = sum E^(n) g^n for omega = 1:
// 1/2 + (3/4)g - (15/4)g^2 + 54 g^3 - (20817/16)g^4 + (216243/5)g^5 - ...
RationalSeries weak_coupling_energy(int order, double omega = 1.0);

// E^(n) divided by the factorial-growth asymptote -(sqrt6/pi)(-3/4)^n (2n)!/n!.
double factorial_asymptote_ratio(const RationalSeries& coeffs, int n);

// Large-g expansion data: E0(g) ~ g^{1/3} (alpha_0 + alpha_1 g^{-2/3} + alpha_2 g^{-4/3}).
struct StrongCouplingCoeffs {
    std::array<double, 3> b;        // B_0, B_1, B_2
    std::array<double, 3> omega_n;  // leading terms of omega_bar(g)
    std::array<double, 3> j_n;      // leading terms of the gaussian-integral factor
    std::array<double, 3> alpha_n;  // energy expansion coefficients
};

StrongCouplingCoeffs strong_coupling_coeffs(double omega);

// Published reference values of the exact (non-model) strong-coupling energy
// coefficients at omega = 1, for side-by-side reporting.
std::array<double, 3> strong_coupling_exact_reference();

// Published exact (non-model) weak-coupling coefficients E^(n), n = 0..5, at
// omega = 1: 1/2, 3/4, -21/8, 333/16, -30885/128, 916731/256.
RationalSeries weak_coupling_exact_reference();

}  // namespace qosc
