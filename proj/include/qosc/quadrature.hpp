#pragma once

#include <functional>

#include "qosc/types.hpp"

namespace qosc {

enum class Symmetry { even, general };

struct QuadratureSpec {
    double rel_tol = 1e-12;
    int max_refinements = 2000;
    // Truncation radius starts at scale_hint * radius_multiplier and doubles
    // until the integrand is negligible relative to its observed peak.
    double scale_hint = 1.0;
    double radius_multiplier = 8.0;
    Symmetry symmetry = Symmetry::general;
};

// Integral over the whole real line of a rapidly decaying integrand.
// With Symmetry::even only x >= 0 is evaluated and the result doubled.
double integrate_decaying(const std::function<double(double)>& f, const QuadratureSpec& spec);

// Integral over [0, inf) of a rapidly decaying integrand.
double integrate_half_line(const std::function<double(double)>& f, const QuadratureSpec& spec);

}  // namespace qosc
