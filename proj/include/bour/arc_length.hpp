#pragma once

#include "bour/surface.hpp"

namespace bour {

struct RootConfig {
    double abs_tol = 1e-10;  // residual tolerance on the arc length, cm
    int max_iter = 200;
};

// Length of the round at parameter radius r: 2*pi*s*(r^{m-1} + r^{m+1}).
double circumference(const SurfaceSpec& spec, double r);

// Arc length along a radial curve between r_a <= r_b, independent of theta:
// s * [r^{m-1}/(m-1) + r^{m+1}/(m+1)] evaluated as a difference.
double radial_arc_length(const SurfaceSpec& spec, double r_a, double r_b);

// Lower anchor of the radial arc: 0 when m > 1, else r_min (the integral from
// 0 diverges for m < 1).
double radial_anchor(const SurfaceSpec& spec);

// Arc length from the anchor to r_max; upper bound for invert_radial targets.
double max_radial_arc(const SurfaceSpec& spec);

// Solves radial_arc_length(anchor, r) = target by bracketing bisection on the
// strictly increasing arc length. Residual meets cfg.abs_tol or throws.
double invert_radial(const SurfaceSpec& spec, double target, RootConfig cfg = {});

// Quadrature cross-checks of the closed forms above; these integrate the norm
// of the partial-derivative vectors instead of using the power-law formulas.
double circumference_quadrature(const SurfaceSpec& spec, double r, double tol = 1e-10);
double radial_quadrature(const SurfaceSpec& spec, double r_a, double r_b, double theta,
                         double tol = 1e-10);

}  // namespace bour
