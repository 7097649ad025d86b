#pragma once

#include "qosc/types.hpp"

namespace qosc {

// Self-consistent local-oscillator data of the effective classical potential
// at one centroid position.
struct FkPointSolution {
    double x0;
    double omega_loc;  // Omega(x0)
    double a2;         // smearing width a^2(x0)
    double w1;         // effective potential W1(x0)
};

struct BfSolution {
    double omega_tilde;  // root of w^3 - omega^2 w - 6 g coth(w beta / 2) = 0
    double free_energy;
};

// Smeared-potential variational point solution:
// a^2 = (z coth z - 1)/(Omega^2 beta), z = Omega beta / 2, and
// Omega^2 = omega^2 + 12 g (a^2 + x0^2) solved jointly.
FkPointSolution fk_effective_potential(double x0, double beta, const OscillatorParams& params);

// Z = (2 pi beta)^{-1/2} integral over x0 of e^{-beta W1(x0)}.
ThermoPoint fk_partition(double beta, const OscillatorParams& params);

// E0 = Omega0/4 + omega^2/(4 Omega0) + 3g/(4 Omega0^2) with Omega0 the real
// positive root of Omega^3 - omega^2 Omega - 6g = 0; continuous in g.
double fk_ground_energy(const OscillatorParams& params);
double fk_cubic_root(const OscillatorParams& params);

// Extrapolated first excited energy from E1(beta) = -(1/beta) ln(Z - e^{-beta E0})
// on a beta grid; reported for comparison even though this baseline is a poor
// gap estimator (it collapses toward E0). The sampling window shrinks
// automatically when e^{-beta gap} falls below the integration noise floor;
// throws DegeneracyError when no window with enough usable points exists.
double fk_first_excited(const OscillatorParams& params, double beta_max = 40.0);

BfSolution bf_free_energy(double beta, const OscillatorParams& params);
ThermoPoint bf_partition(double beta, const OscillatorParams& params);

// Finite-temperature gap estimators using each baseline's own asymptotic
// ground energy, mirroring the model's definition.
double fk_gap(double beta, const OscillatorParams& params);
double bf_gap(double beta, const OscillatorParams& params);

// Percentage error convention for free-energy comparison tables:
// 100 (f_model - f_exact) / |f_exact|.
double relative_error_percent(double f_model, double f_exact);

}  // namespace qosc
