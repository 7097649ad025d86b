#pragma once

#include <vector>

#include "qosc/rational.hpp"
#include "qosc/types.hpp"

namespace qosc {

// Eigenvalues of the cyclic discretized-action quadratic form:
// lambda_k = 1 - cos(2 pi (k-1)/n), k = 1..n, evaluated as 2 sin^2 for accuracy.
struct ChainEigenvalues {
    int n;
    std::vector<double> lambdas;
};

ChainEigenvalues chain_eigenvalues(int n);

// prod_{k=1}^{n-1} sin(pi k / n); equals n / 2^{n-1} exactly.
struct SineProduct {
    BigRational exact;
    double numeric;
};

SineProduct sine_product(int n);

// P_n(x) = prod_{i=2}^{n} (1 + x^2/(2 lambda_i n^2))^{-1/2}, computed in log
// space; converges to x / (2 sinh(x/2)) as n grows.
double p_n(double x, int n);
double p_infinity(double x);

// Discretized harmonic partition function Z_n = P_n(beta omega) / (beta omega).
double harmonic_zn(int n, double beta, double omega);

// prod_{k=2}^{n} 1/sqrt(2 lambda_k); equals 1/n exactly.
double bracket_product(int n);

}  // namespace qosc
