#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qosc/quadrature.hpp"
#include "qosc/rational.hpp"
#include "qosc/special_functions.hpp"

TEST_CASE("gamma at quarter-integer arguments") {
    CHECK(qosc::gamma(0.25) == doctest::Approx(3.62560990822190831193).epsilon(1e-14));
    CHECK(qosc::gamma(0.75) == doctest::Approx(1.22541670246517764513).epsilon(1e-14));
    CHECK(qosc::gamma(1.25) == doctest::Approx(0.906402477055477077983).epsilon(1e-14));
    CHECK(qosc::gamma(1.75) == doctest::Approx(0.919062526848883233847).epsilon(1e-14));
    CHECK(qosc::gamma(-0.25) == doctest::Approx(-4.90166680986071058052).epsilon(1e-14));
}

TEST_CASE("gamma basic identities") {
    CHECK(qosc::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(qosc::gamma(0.5) == doctest::Approx(qosc::sqrt_pi).epsilon(1e-15));
    // recurrence on the negative branch: Gamma(x+1) = x Gamma(x)
    const double x = -0.63;
    CHECK(x * qosc::gamma(x) == doctest::Approx(qosc::gamma(x + 1.0)).epsilon(1e-13));
}

TEST_CASE("gamma domain restrictions") {
    CHECK_THROWS_AS(qosc::gamma(0.0), qosc::DomainError);
    CHECK_THROWS_AS(qosc::gamma(-1.0), qosc::DomainError);
    CHECK_THROWS_AS(qosc::gamma(-1.5), qosc::DomainError);
}

TEST_CASE("modified Bessel K at frozen probe points") {
    CHECK(qosc::bessel_k(0.25, 0.125) ==
          doctest::Approx(2.41526492320032694537).epsilon(1e-12));
    CHECK(qosc::bessel_k(0.25, 0.05) ==
          doctest::Approx(3.58773754526402722256).epsilon(1e-12));
    CHECK(qosc::bessel_k(1.25, 2.0) ==
          doctest::Approx(0.156747547839393215573).epsilon(1e-12));
    CHECK(qosc::bessel_k(0.75, 1.0) ==
          doctest::Approx(0.515775300695918628578).epsilon(1e-12));
    CHECK(qosc::bessel_k(0.25, 10.0) ==
          doctest::Approx(1.78331844398063922804e-5).epsilon(1e-12));
}

TEST_CASE("Bessel K order symmetry and recurrence") {
    CHECK(qosc::bessel_k(-0.25, 0.7) ==
          doctest::Approx(qosc::bessel_k(0.25, 0.7)).epsilon(1e-13));
    // K_{nu+1}(x) = K_{nu-1}(x) + (2 nu / x) K_nu(x), nu = 1/4
    for (double x : {0.3, 2.0}) {
        const double lhs = qosc::bessel_k(1.25, x);
        const double rhs =
            qosc::bessel_k(0.75, x) + 0.5 / x * qosc::bessel_k(0.25, x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("Bessel K integral representation cross-check") {
    // K_nu(x) = integral_0^inf e^{-x cosh t} cosh(nu t) dt
    const double nu = 0.25, x = 1.3;
    auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
    qosc::QuadratureSpec s;
    s.rel_tol = 1e-13;
    const double direct = qosc::integrate_half_line(f, s);
    CHECK(qosc::bessel_k(nu, x) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("Bessel K rejects non-positive arguments") {
    CHECK_THROWS_AS(qosc::bessel_k(0.25, 0.0), qosc::DomainError);
    CHECK_THROWS_AS(qosc::bessel_k(0.25, -2.0), qosc::DomainError);
}

TEST_CASE("gaussian quartic moments as exact rationals") {
    using qosc::BigRational;
    CHECK(qosc::gaussian_moment_4n(0) == BigRational(1));
    CHECK(qosc::gaussian_moment_4n(1) == BigRational(3, 4));
    CHECK(qosc::gaussian_moment_4n(2) == BigRational(105, 16));
    CHECK(qosc::gaussian_moment_4n(3) == BigRational(10395, 64));

    // against quadrature: integral x^{4n} e^{-x^2} = moment * sqrt(pi)
    for (int n = 0; n <= 3; ++n) {
        auto f = [n](double x) { return std::pow(x, 4 * n) * std::exp(-x * x); };
        qosc::QuadratureSpec s;
        s.rel_tol = 1e-13;
        s.symmetry = qosc::Symmetry::even;
        s.scale_hint = 1.0 + n;
        const double numeric = qosc::integrate_decaying(f, s);
        const double exact = qosc::to_double(qosc::gaussian_moment_4n(n)) * qosc::sqrt_pi;
        CHECK(numeric == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("double factorial and factorial helpers") {
    using qosc::BigInt;
    CHECK(qosc::double_factorial(-1) == BigInt(1));
    CHECK(qosc::double_factorial(1) == BigInt(1));
    CHECK(qosc::double_factorial(7) == BigInt(105));
    CHECK(qosc::factorial(0) == BigInt(1));
    CHECK(qosc::factorial(6) == BigInt(720));
    CHECK_THROWS_AS(qosc::double_factorial(4), qosc::DomainError);
    CHECK_THROWS_AS(qosc::factorial(-1), qosc::DomainError);
}

TEST_CASE("fraction rendering") {
    using qosc::BigRational;
    CHECK(qosc::to_fraction_string(BigRational(-20817, 16)) == "-20817/16");
    CHECK(qosc::to_fraction_string(BigRational(54)) == "54");
}
