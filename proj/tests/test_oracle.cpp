#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "qosc/oracle.hpp"
#include "qosc/quadrature.hpp"
#include "qosc/special_functions.hpp"
#include "qosc/spectrum.hpp"
#include "qosc/types.hpp"

using qosc::BasisSpec;
using qosc::OscillatorParams;

namespace {
const OscillatorParams kUnit{1.0, 1.0};
}

TEST_CASE("harmonic spectrum is reproduced exactly in its own basis") {
    const OscillatorParams h{1.0, 0.0};
    BasisSpec basis;
    basis.size = 60;
    basis.basis_frequency = 1.0;
    const auto H = qosc::build_hamiltonian(h, basis);
    for (int i = 0; i < 60; ++i) {
        for (int j = 0; j < 60; ++j) {
            if (i != j) CHECK(std::fabs(H(i, j)) < 1e-14);
        }
    }
    const auto spec = qosc::exact_spectrum(h, basis);
    for (int k = 0; k < 60; ++k) {
        CHECK(std::fabs(spec.energies[k] - (k + 0.5)) < 1e-12 * (k + 0.5));
    }
}

TEST_CASE("hamiltonian matrix is symmetric and banded") {
    BasisSpec basis;
    basis.size = 40;
    basis.basis_frequency = 1.7;
    const auto H = qosc::build_hamiltonian(kUnit, basis);
    for (int i = 0; i < 40; ++i) {
        for (int j = 0; j < 40; ++j) {
            CHECK(H(i, j) == H(j, i));
            const int d = std::abs(i - j);
            if (d != 0 && d != 2 && d != 4) CHECK(H(i, j) == 0.0);
        }
    }
}

TEST_CASE("quartic matrix element against a gaussian-moment quadrature") {
    // <0|x^4|0> in a frequency-W basis equals 3/(4 W^2); extract it as the
    // g-coefficient of H(0,0) and compare with direct quadrature.
    const double W = 1.7;
    BasisSpec basis;
    basis.size = 12;
    basis.basis_frequency = W;
    const auto H1 = qosc::build_hamiltonian(OscillatorParams{1.0, 1.0}, basis);
    const auto H0 = qosc::build_hamiltonian(OscillatorParams{1.0, 0.0}, basis);
    const double x4 = H1(0, 0) - H0(0, 0);

    qosc::QuadratureSpec qs;
    qs.rel_tol = 1e-13;
    qs.symmetry = qosc::Symmetry::even;
    qs.scale_hint = 1.0 / std::sqrt(W);
    const double direct = qosc::integrate_decaying(
        [&](double x) {
            return std::pow(x, 4) * std::sqrt(W / qosc::pi) * std::exp(-W * x * x);
        },
        qs);
    CHECK(x4 == doctest::Approx(3.0 / (4.0 * W * W)).epsilon(1e-13));
    CHECK(x4 == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("low-lying quartic spectrum at frozen probe points") {
    const auto spec = qosc::exact_spectrum(kUnit);
    CHECK(spec.energies[0] == doctest::Approx(0.803770651234274).epsilon(1e-10));
    CHECK(spec.energies[1] == doctest::Approx(2.73789226800886).epsilon(1e-10));
    CHECK(spec.energies[2] == doctest::Approx(5.17929168763943).epsilon(1e-10));
    CHECK(spec.converged_count >= 20);

    const auto g10 = qosc::exact_spectrum(OscillatorParams{1.0, 10.0});
    CHECK(g10.energies[0] == doctest::Approx(1.50497240777889).epsilon(1e-10));
    CHECK(g10.energies[1] == doctest::Approx(5.32160825624034).epsilon(1e-10));
}

TEST_CASE("ground level is stable to ten digits under basis changes") {
    BasisSpec b100;
    b100.size = 100;
    BasisSpec b200;
    b200.size = 200;
    const double e_100 = qosc::exact_spectrum(kUnit, b100).energies[0];
    const double e_200 = qosc::exact_spectrum(kUnit, b200).energies[0];
    CHECK(std::fabs(e_200 - e_100) < 1e-10 * std::max(1.0, std::fabs(e_200)));

    BasisSpec shifted;
    shifted.size = 200;
    shifted.basis_frequency = 1.3 * qosc::resolve_basis_frequency(kUnit, BasisSpec{});
    const double e_shift = qosc::exact_spectrum(kUnit, shifted).energies[0];
    CHECK(std::fabs(e_shift - e_200) < 1e-10 * std::max(1.0, std::fabs(e_200)));
}

TEST_CASE("variational monotonicity under basis enlargement") {
    BasisSpec small;
    small.size = 50;
    BasisSpec large;
    large.size = 100;
    const auto es = qosc::exact_spectrum(kUnit, small);
    const auto el = qosc::exact_spectrum(kUnit, large);
    for (int k = 0; k < 10; ++k) {
        // enlarging the basis can only lower a level, up to eigensolver roundoff
        CHECK(el.energies[k] <= es.energies[k] + 1e-12 * std::max(1.0, es.energies[k]));
    }
}

TEST_CASE("parity blocks interleave and merge into the full spectrum") {
    const auto spec = qosc::exact_spectrum(kUnit);
    const auto [even, odd] = qosc::parity_block_energies(kUnit);
    std::vector<double> merged;
    merged.insert(merged.end(), even.begin(), even.end());
    merged.insert(merged.end(), odd.begin(), odd.end());
    std::sort(merged.begin(), merged.end());
    for (int k = 0; k < 50; ++k) {
        CHECK(merged[k] == doctest::Approx(spec.energies[k]).epsilon(1e-9));
    }
    // strict alternation of parity in the ordered spectrum
    for (int k = 0; k + 1 < 25; ++k) {
        CHECK(even[k] < odd[k]);
        CHECK(odd[k] < even[k + 1]);
    }
}

TEST_CASE("partition function: harmonic check and validity floor") {
    const OscillatorParams h{1.0, 0.0};
    BasisSpec basis;
    basis.basis_frequency = 1.0;
    const auto spec = qosc::exact_spectrum(h, basis);
    for (double beta : {0.5, 1.0, 10.0}) {
        const double z = qosc::exact_partition(beta, spec).z;
        CHECK(z == doctest::Approx(1.0 / (2.0 * std::sinh(beta / 2.0))).epsilon(1e-12));
    }
    CHECK_THROWS_AS(qosc::exact_partition(0.04, spec), qosc::ValidityError);
    try {
        qosc::exact_partition(0.04, spec);
    } catch (const qosc::ValidityError& e) {
        CHECK(e.min_beta >= 0.05);
        CHECK(e.min_beta <= 1.0);
    }
}

TEST_CASE("partition sum rejects an insufficient basis at small beta") {
    BasisSpec tiny;
    tiny.size = 10;
    const auto spec = qosc::exact_spectrum(kUnit, tiny);
    CHECK_THROWS_AS(qosc::exact_partition(0.1, spec), qosc::ValidityError);
    // ...while a cold point is still certifiable with ten levels
    const double z5 = qosc::exact_partition(5.0, spec).z;
    CHECK(z5 == doctest::Approx(std::exp(-5.0 * spec.energies[0])).epsilon(1e-2));
}

TEST_CASE("high-temperature limit approaches the classical partition function") {
    const auto spec = qosc::exact_spectrum(kUnit);
    const double z_ex = qosc::exact_partition(0.1, spec).z;
    qosc::QuadratureSpec qs;
    qs.rel_tol = 1e-12;
    qs.symmetry = qosc::Symmetry::even;
    qs.scale_hint = 1.0;
    const double iv = qosc::integrate_decaying(
        [](double x) { return std::exp(-0.1 * (0.5 * x * x + std::pow(x, 4))); }, qs);
    const double z_cl = iv / std::sqrt(2.0 * qosc::pi * 0.1);
    CHECK(std::fabs(z_ex / z_cl - 1.0) > 0.004);
    CHECK(std::fabs(z_ex / z_cl - 1.0) < 0.006);
}

TEST_CASE("finite-temperature exact energies") {
    const auto spec = qosc::exact_spectrum(kUnit);
    const auto e10 = qosc::exact_finite_temperature_energies(10.0, spec);
    const double gap_inf = spec.energies[1] - spec.energies[0];
    CHECK(e10.e0_beta < spec.energies[0]);
    CHECK(e10.gap_beta >= gap_inf * (1.0 - 1e-12));
    CHECK(std::fabs(e10.gap_beta - gap_inf) < 1e-8);
    CHECK(e10.e1_beta == doctest::Approx(e10.e0_beta + e10.gap_beta).epsilon(1e-14));

    const auto e30 = qosc::exact_finite_temperature_energies(30.0, spec);
    CHECK(e30.gap_beta == doctest::Approx(gap_inf).epsilon(1e-13));
}

TEST_CASE("spectrum save/load round trip") {
    const std::string path = "oracle_roundtrip.tmp";
    BasisSpec basis;
    basis.size = 64;
    const auto spec = qosc::exact_spectrum(kUnit, basis);
    qosc::save_spectrum(path, spec, kUnit, basis);
    const auto loaded = qosc::load_spectrum(path);
    CHECK(loaded.params.omega == kUnit.omega);
    CHECK(loaded.params.g == kUnit.g);
    CHECK(loaded.basis.size == 64);
    CHECK(loaded.spectrum.converged_count == spec.converged_count);
    REQUIRE(loaded.spectrum.energies.size() == spec.energies.size());
    for (size_t k = 0; k < spec.energies.size(); ++k) {
        CHECK(loaded.spectrum.energies[k] == spec.energies[k]);
    }
    std::remove(path.c_str());
}

TEST_CASE("spectrum loader rejects missing and malformed files") {
    CHECK_THROWS_AS(qosc::load_spectrum("no_such_file.tmp"), qosc::SolverError);
    const std::string path = "oracle_bad.tmp";
    {
        std::ofstream out(path);
        out << "not a spectrum\n";
    }
    CHECK_THROWS_AS(qosc::load_spectrum(path), qosc::SolverError);
    std::remove(path.c_str());
}

TEST_CASE("basis validation") {
    BasisSpec bad;
    bad.size = 5;
    CHECK_THROWS_AS(qosc::exact_spectrum(kUnit, bad), qosc::DomainError);
    CHECK_THROWS_AS(qosc::exact_spectrum(OscillatorParams{-1.0, 1.0}), qosc::DomainError);
}
