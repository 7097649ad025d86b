#pragma once

#include "qosc/types.hpp"

namespace qosc {

enum class BMethod { automatic, quadrature, bessel, asymptotic };

// Variance-ratio function B(x) together with its derivative and the
// evaluation path that produced it.
struct BEvaluation {
    double x;
    double value;
    double derivative;
    BMethod method;
};

// Coefficients of the large-x expansion B(x) = sqrt(x)(b0 + b1/sqrt(x) + b2/x).
struct BAsymptoticCoefficients {
    double b0, b1, b2;
};
BAsymptoticCoefficients b_asymptotic_coefficients();

// M_k(x) = integral of y^k e^{-y^2 - x y^4} over the real line, k even.
double moment_integral(int k, double x);

// B(x) = M_0(x) / (2 M_2(x)); B(0) = 1, strictly increasing, ~ b0 sqrt(x).
double b_function(double x, BMethod method = BMethod::automatic);

// B'(x) = (M_0 M_6 - M_2 M_4) / (2 M_2^2) > 0.
double b_derivative(double x);

BEvaluation evaluate_b(double x, BMethod method = BMethod::automatic);

// Effective gaussian frequency omega_g(tau) = omega sqrt(B(4 g / (tau omega^4))).
double omega_g(double tau, const OscillatorParams& params);

}  // namespace qosc
