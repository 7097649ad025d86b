#include "qosc/series.hpp"

#include <cmath>

#include "qosc/special_functions.hpp"

namespace qosc {

namespace {

void check_order(int order) {
    if (order < 0) throw DomainError("series order must be non-negative");
}

// Exact square root of a non-negative rational, or throw.
BigRational rational_sqrt(const BigRational& r) {
    if (r < 0) throw DomainError("series_sqrt: negative constant term");
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const BigInt sn = boost::multiprecision::sqrt(num);
    const BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) {
        throw DomainError("series_sqrt: constant term is not the square of a rational");
    }
    return BigRational(sn, sd);
}

}  // namespace

RationalSeries make_series(int order) {
    check_order(order);
    RationalSeries s;
    s.order = order;
    s.coefficients.assign(static_cast<size_t>(order) + 1, BigRational(0));
    return s;
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
    const int order = std::min(a.order, b.order);
    RationalSeries r = make_series(order);
    for (int k = 0; k <= order; ++k) {
        r.coefficients[k] = a.coefficients[k] + b.coefficients[k];
    }
    return r;
}

RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b) {
    const int order = std::min(a.order, b.order);
    RationalSeries r = make_series(order);
    for (int k = 0; k <= order; ++k) {
        r.coefficients[k] = a.coefficients[k] - b.coefficients[k];
    }
    return r;
}

RationalSeries series_scale(const BigRational& c, const RationalSeries& a) {
    RationalSeries r = make_series(a.order);
    for (int k = 0; k <= a.order; ++k) {
        r.coefficients[k] = c * a.coefficients[k];
    }
    return r;
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
    const int order = std::min(a.order, b.order);
    RationalSeries r = make_series(order);
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; i + j <= order; ++j) {
            r.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
        }
    }
    return r;
}

RationalSeries series_inverse(const RationalSeries& a) {
    if (a.coefficients[0] == 0) {
        throw DomainError("series_inverse: zero constant term");
    }
    RationalSeries r = make_series(a.order);
    r.coefficients[0] = 1 / a.coefficients[0];
    for (int n = 1; n <= a.order; ++n) {
        BigRational acc(0);
        for (int k = 1; k <= n; ++k) {
            acc += a.coefficients[k] * r.coefficients[n - k];
        }
        r.coefficients[n] = -acc / a.coefficients[0];
    }
    return r;
}

RationalSeries series_log(const RationalSeries& a) {
    if (a.coefficients[0] != 1) {
        throw DomainError("series_log: constant term must be 1");
    }
    RationalSeries r = make_series(a.order);
    for (int n = 1; n <= a.order; ++n) {
        BigRational acc = a.coefficients[n];
        for (int k = 1; k < n; ++k) {
            acc -= BigRational(k, n) * r.coefficients[k] * a.coefficients[n - k];
        }
        r.coefficients[n] = acc;
    }
    return r;
}

RationalSeries series_sqrt(const RationalSeries& a) {
    RationalSeries r = make_series(a.order);
    r.coefficients[0] = rational_sqrt(a.coefficients[0]);
    if (r.coefficients[0] == 0) {
        throw DomainError("series_sqrt: zero constant term");
    }
    for (int n = 1; n <= a.order; ++n) {
        BigRational acc = a.coefficients[n];
        for (int k = 1; k < n; ++k) {
            acc -= r.coefficients[k] * r.coefficients[n - k];
        }
        r.coefficients[n] = acc / (2 * r.coefficients[0]);
    }
    return r;
}

RationalSeries series_compose(const RationalSeries& a, const RationalSeries& b) {
    if (b.coefficients[0] != 0) {
        throw DomainError("series_compose: inner series must have zero constant term");
    }
    const int order = std::min(a.order, b.order);
    // Horner evaluation in the truncated-series ring.
    RationalSeries r = make_series(order);
    for (int k = a.order; k >= 0; --k) {
        r = series_mul(r, b);
        r.coefficients[0] += a.coefficients[k];
    }
    return r;
}

RationalSeries series_compose(const RationalSeries& a, const BigRational& value) {
    RationalSeries r = make_series(0);
    r.coefficients[0] = series_eval(a, value);
    return r;
}

BigRational series_eval(const RationalSeries& a, const BigRational& value) {
    BigRational acc(0);
    for (int k = a.order; k >= 0; --k) {
        acc = acc * value + a.coefficients[k];
    }
    return acc;
}

RationalSeries b_taylor(int order) {
    check_order(order);
    // B(x) = (sum_j p_j x^j) / (sum_j q_j x^j) with
    // p_j = (-1)^j (4j-1)!!/(j! 4^j), q_j = (-1)^j (4j+1)!!/(j! 4^j).
    RationalSeries num = make_series(order);
    RationalSeries den = make_series(order);
    for (int j = 0; j <= order; ++j) {
        const BigInt sign = (j % 2 == 0) ? 1 : -1;
        const BigInt scale = factorial(j) * (BigInt(1) << (2 * j));
        num.coefficients[j] = BigRational(sign * double_factorial(4L * j - 1), scale);
        den.coefficients[j] = BigRational(sign * double_factorial(4L * j + 1), scale);
    }
    return series_mul(num, series_inverse(den));
}

RationalSeries weak_coupling_energy(int order, double omega) {
    check_order(order);
    if (omega != 1.0) {
        throw DomainError(
            "weak_coupling_energy: exact rational mode supports omega = 1 only; "
            "use ground_energy for other omega");
    }

    const RationalSeries b_series = b_taylor(order);

    // Solve omega_bar = sqrt(B(2 g omega_bar)) by iterated substitution;
    // each pass fixes one more coefficient.
    RationalSeries w_bar = make_series(order);
    w_bar.coefficients[0] = 1;
    for (int pass = 0; pass <= order; ++pass) {
        RationalSeries arg = make_series(order);  // 2 g omega_bar
        for (int k = 1; k <= order; ++k) {
            arg.coefficients[k] = 2 * w_bar.coefficients[k - 1];
        }
        w_bar = series_sqrt(series_compose(b_series, arg));
    }

    // J = omega_bar * sum_k c_k (g omega_bar)^k, c_k = (-1)^k (4k-1)!!/(k! 2^k).
    RationalSeries g_wbar = make_series(order);
    for (int k = 1; k <= order; ++k) {
        g_wbar.coefficients[k] = w_bar.coefficients[k - 1];
    }
    RationalSeries power = make_series(order);
    power.coefficients[0] = 1;
    RationalSeries sum = make_series(order);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) power = series_mul(power, g_wbar);
        const BigInt sign = (k % 2 == 0) ? 1 : -1;
        const BigRational c_k(sign * double_factorial(4L * k - 1), factorial(k) * (BigInt(1) << k));
        sum = series_add(sum, series_scale(c_k, power));
    }
    const RationalSeries j_series = series_mul(w_bar, sum);

    // E0 = (omega_bar / 2)(1 - log J).
    RationalSeries one_minus_log = series_scale(BigRational(-1), series_log(j_series));
    one_minus_log.coefficients[0] += 1;
    return series_scale(BigRational(1, 2), series_mul(w_bar, one_minus_log));
}

double factorial_asymptote_ratio(const RationalSeries& coeffs, int n) {
    if (n < 2 || n > coeffs.order) {
        throw DomainError("factorial_asymptote_ratio: need 2 <= n <= order");
    }
    const double growth = BigRational(factorial(2L * n), factorial(n)).convert_to<double>();
    const double asymptote =
        -(std::sqrt(6.0) / pi) * std::pow(-0.75, n) * growth;
    return to_double(coeffs.coefficients[n]) / asymptote;
}

StrongCouplingCoeffs strong_coupling_coeffs(double omega) {
    if (!(omega > 0.0)) {
        throw DomainError("strong_coupling_coeffs: omega must be positive");
    }
    const double g14 = gamma(0.25);
    const double g34 = gamma(0.75);
    const double g54 = gamma(1.25);
    const double g74 = gamma(1.75);
    const double gm14 = gamma(-0.25);

    const double b0 = 2.0 * g54 / g34;
    const double b1 = (4.0 * g54 * g54 - g34 * g34) / (2.0 * g34 * g34);
    const double b2 = -g54 * (g34 * g34 - 8.0 * g54 * g54 + 4.0 * g34 * g74) /
                      (4.0 * g34 * g34 * g34);

    const double w2 = omega * omega;
    const double w4 = w2 * w2;
    const double cbrt2 = std::cbrt(2.0);
    const double cbrt4 = cbrt2 * cbrt2;

    const double w0 = std::cbrt(b0 * b0);
    const double w1 = cbrt2 * w2 * b1 / (3.0 * w0);
    const double ww2 = cbrt4 * w4 * (2.0 * b0 * b2 - b1 * b1) / (12.0 * b0 * b0);

    const double sqrt_w0 = std::sqrt(w0);
    const double q0 = std::sqrt(sqrt_w0);  // w0^{1/4}
    const double j0 = sqrt_w0 * q0 * g14 / (2.0 * sqrt_pi);
    const double j1 =
        (cbrt2 * w2 * sqrt_w0 * gm14 + 6.0 * w1 * g14) / (16.0 * sqrt_pi * q0);
    const double j2 = (cbrt2 * sqrt_w0 * w1 * w2 * gm14 +
                       (cbrt4 * w4 * w0 - 3.0 * w1 * w1 + 24.0 * w0 * ww2) * g14) /
                      (64.0 * sqrt_pi * w0 * q0);

    const double one_minus_log = 1.0 - std::log(j0);
    const double pref = 1.0 / cbrt4;
    const double a0 = pref * w0 * one_minus_log;
    const double a1 = pref * (-j1 * w0 / j0 + w1 * one_minus_log);
    const double a2 = pref * ((j1 * j1 - 2.0 * j0 * j2) * w0 / (2.0 * j0 * j0) -
                              j1 * w1 / j0 + ww2 * one_minus_log);

    return StrongCouplingCoeffs{{b0, b1, b2}, {w0, w1, ww2}, {j0, j1, j2}, {a0, a1, a2}};
}

std::array<double, 3> strong_coupling_exact_reference() {
    return {0.6679, 0.1436, -0.0086};
}

RationalSeries weak_coupling_exact_reference() {
    RationalSeries s = make_series(5);
    s.coefficients[0] = BigRational(1, 2);
    s.coefficients[1] = BigRational(3, 4);
    s.coefficients[2] = BigRational(-21, 8);
    s.coefficients[3] = BigRational(333, 16);
    s.coefficients[4] = BigRational(-30885, 128);
    s.coefficients[5] = BigRational(916731, 256);
    return s;
}

}  // namespace qosc
