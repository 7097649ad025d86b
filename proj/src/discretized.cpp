#include "qosc/discretized.hpp"

#include <cmath>

#include "qosc/special_functions.hpp"

namespace qosc {

ChainEigenvalues chain_eigenvalues(int n) {
    if (n <= 2) throw DomainError("chain_eigenvalues: n must exceed 2");
    ChainEigenvalues result{n, {}};
    result.lambdas.reserve(n);
    for (int k = 1; k <= n; ++k) {
        const double s = std::sin(pi * (k - 1) / n);
        result.lambdas.push_back(2.0 * s * s);
    }
    return result;
}

SineProduct sine_product(int n) {
    if (n < 2) throw DomainError("sine_product: n must be at least 2");
    double numeric = 1.0;
    for (int k = 1; k < n; ++k) {
        numeric *= std::sin(pi * k / n);
    }
    return SineProduct{BigRational(n, BigInt(1) << (n - 1)), numeric};
}

double p_n(double x, int n) {
    if (n <= 2) throw DomainError("p_n: n must exceed 2");
    if (!(x >= 0.0)) throw DomainError("p_n: x must be non-negative");
    const double x2 = x * x;
    const double n2 = static_cast<double>(n) * n;
    double log_p = 0.0;
    for (int i = 2; i <= n; ++i) {
        const double s = std::sin(pi * (i - 1) / n);
        const double lambda = 2.0 * s * s;
        log_p -= 0.5 * std::log1p(x2 / (2.0 * lambda * n2));
    }
    return std::exp(log_p);
}

double p_infinity(double x) {
    if (!(x >= 0.0)) throw DomainError("p_infinity: x must be non-negative");
    if (x == 0.0) return 1.0;
    // x / (2 sinh(x/2)) = x e^{-x/2} / (1 - e^{-x}).
    return x * std::exp(-0.5 * x) / -std::expm1(-x);
}

double harmonic_zn(int n, double beta, double omega) {
    if (!(beta > 0.0) || !(omega > 0.0)) {
        throw DomainError("harmonic_zn: beta and omega must be positive");
    }
    return p_n(beta * omega, n) / (beta * omega);
}

double bracket_product(int n) {
    if (n <= 2) throw DomainError("bracket_product: n must exceed 2");
    double log_prod = 0.0;
    for (int k = 2; k <= n; ++k) {
        const double s = std::sin(pi * (k - 1) / n);
        log_prod -= 0.5 * std::log(4.0 * s * s);
    }
    return std::exp(log_prod);
}

}  // namespace qosc
