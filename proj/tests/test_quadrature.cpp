#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qosc/quadrature.hpp"
#include "qosc/special_functions.hpp"

using qosc::integrate_decaying;
using qosc::integrate_half_line;
using qosc::QuadratureSpec;
using qosc::Symmetry;

namespace {
QuadratureSpec spec_with(double rel_tol, Symmetry sym = Symmetry::general,
                         double scale = 1.0) {
    QuadratureSpec s;
    s.rel_tol = rel_tol;
    s.symmetry = sym;
    s.scale_hint = scale;
    return s;
}
}  // namespace

TEST_CASE("gaussian integral, both symmetry modes") {
    auto f = [](double x) { return std::exp(-x * x); };
    const double exact = qosc::sqrt_pi;
    CHECK(integrate_decaying(f, spec_with(1e-13, Symmetry::general)) ==
          doctest::Approx(exact).epsilon(1e-13));
    CHECK(integrate_decaying(f, spec_with(1e-13, Symmetry::even)) ==
          doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("second gaussian moment") {
    auto f = [](double x) { return x * x * std::exp(-x * x); };
    CHECK(integrate_decaying(f, spec_with(1e-13, Symmetry::even)) ==
          doctest::Approx(qosc::sqrt_pi / 2.0).epsilon(1e-12));
}

TEST_CASE("off-center peak is still captured (general symmetry)") {
    auto f = [](double x) { return std::exp(-(x - 3.0) * (x - 3.0)); };
    QuadratureSpec s = spec_with(1e-12, Symmetry::general, 4.0);
    CHECK(integrate_decaying(f, s) == doctest::Approx(qosc::sqrt_pi).epsilon(1e-11));
}

TEST_CASE("quartic-weight integral matches Bessel closed form") {
    // integral of exp(-x^2 - x^4) over the real line = e^{1/8} K_{1/4}(1/8) / 2
    auto f = [](double x) { return std::exp(-x * x - x * x * x * x); };
    const double exact = 1.36842685573550877311;
    CHECK(integrate_decaying(f, spec_with(1e-13, Symmetry::even)) ==
          doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("half-line exponential") {
    auto f = [](double x) { return std::exp(-x); };
    CHECK(integrate_half_line(f, spec_with(1e-12)) ==
          doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("half-line with scale hint") {
    // integral_0^inf x e^{-x/5} dx = 25
    auto f = [](double x) { return x * std::exp(-x / 5.0); };
    CHECK(integrate_half_line(f, spec_with(1e-12, Symmetry::general, 5.0)) ==
          doctest::Approx(25.0).epsilon(1e-11));
}

TEST_CASE("refinement cap raises accuracy error carrying the best estimate") {
    // A kink stalls Gauss-Kronrod convergence, so a tiny refinement budget
    // must fail; the carried estimate should still be in the right ballpark.
    auto f = [](double x) { return std::fabs(x - 0.3) * std::exp(-x * x); };
    const double reference = integrate_decaying(f, spec_with(1e-12));
    QuadratureSpec tight = spec_with(1e-14);
    tight.max_refinements = 3;
    bool threw = false;
    try {
        integrate_decaying(f, tight);
    } catch (const qosc::AccuracyError& e) {
        threw = true;
        CHECK(std::isfinite(e.best_estimate));
        CHECK(e.best_estimate == doctest::Approx(reference).epsilon(1e-3));
    }
    CHECK(threw);
}

TEST_CASE("invalid specs are rejected") {
    auto f = [](double x) { return std::exp(-x * x); };
    QuadratureSpec bad_tol = spec_with(0.0);
    CHECK_THROWS_AS(integrate_decaying(f, bad_tol), qosc::DomainError);
    QuadratureSpec bad_scale = spec_with(1e-12);
    bad_scale.scale_hint = -1.0;
    CHECK_THROWS_AS(integrate_decaying(f, bad_scale), qosc::DomainError);
}

TEST_CASE("even symmetry agrees with general on even integrands") {
    auto f = [](double x) { return std::cos(x) * std::exp(-x * x / 2.0); };
    const double a = integrate_decaying(f, spec_with(1e-13, Symmetry::even, 1.0));
    const double b = integrate_decaying(f, spec_with(1e-13, Symmetry::general, 1.0));
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
    // closed form: sqrt(2 pi) e^{-1/2}
    CHECK(a == doctest::Approx(std::sqrt(2.0 * qosc::pi) * std::exp(-0.5)).epsilon(1e-12));
}
