#pragma once

#include "pullin/nonlinearity.hpp"
#include "pullin/radial.hpp"

#include <vector>

namespace pullin {

struct ShootOptions {
    double tol = 1e-10;           ///< relative integrator tolerance; absolute is tol / 100
    bool refine_seed = true;      ///< halve the seed radius until lambda settles
    int max_seed_halvings = 6;
};

/// Trajectory of v'' + (N-1)/s v' + s^alpha F(v) = 0, v(0) = m, v'(0) = 0, up to
/// its first zero s = R. Rescaling u(r) = v(R r) solves the unit-ball problem
/// with voltage lambda = R^(2 + alpha).
struct Shot {
    double m = 0.0;
    double n = 0.0;
    double alpha = 0.0;
    double radius = 0.0;       ///< first zero R of v
    double lambda = 0.0;       ///< R^(2 + alpha)
    double seed_radius = 0.0;  ///< epsilon at which the Taylor seed was placed
    std::vector<double> s, v, dv;
};

/// Constant-profile shooting in (possibly fractional) dimension n_eff >= 1.
/// Requires 0 < m < a_F. Throws ComputationError("no-crossing") if v has no
/// zero before the a priori radius bound.
Shot shoot(const Nonlinearity& F, double n_eff, double m, const ShootOptions& options = {});
Shot shoot(const Nonlinearity& F, double n_eff, double m, double tol);

/// Direct shooting with the weight |x|^alpha in dimension n (alpha > -2,
/// n + alpha > 0). The seed uses f(eps) = eps^alpha in its Taylor term.
Shot shoot_weighted(const Nonlinearity& F, double n, double alpha, double m, const ShootOptions& options = {});

/// Rescales a shot onto the unit ball: r = s / R.
RadialSolution to_unit_ball(const Shot& shot);

}  // namespace pullin
