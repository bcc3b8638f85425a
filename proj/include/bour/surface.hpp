#pragma once

#include "bour/vec3.hpp"

namespace bour {

// One member of the B_m family: the family exponent m, a global scale factor
// applied to all coordinates, and the admissible (r, theta) parameter domain.
// m must avoid {-1, 0, 1} and models with m < 1 need r_min > 0 because the
// radial terms blow up at the origin.
struct SurfaceSpec {
    double m = 2.0;
    double scale = 1.0;
    double r_min = 0.0;
    double r_max = 8.0;
    double theta_period = 0.0;

    // Arbitrary exponent, theta period 2*pi.
    static SurfaceSpec general(double m, double scale = 1.0, double r_min = 0.0,
                               double r_max = 8.0);
    // Enneper family, m = (k+1)/k, order k+1 symmetry, theta period 2*k*pi.
    static SurfaceSpec enneper(int k, double scale = 1.0, double r_max = 8.0);
    // Richmond family, m = k/(k+1), theta period 2*(k+1)*pi. Needs r_min > 0.
    static SurfaceSpec richmond(int k, double scale = 1.0, double r_min = 0.1,
                                double r_max = 8.0);
    // Bour's surface proper: m = 3 with r in [0, 1].
    static SurfaceSpec bour3(double scale = 1.0);

    SurfaceSpec with_scale(double s) const;

    // Throws std::invalid_argument on a malformed spec, std::domain_error when
    // r falls outside [r_min, r_max].
    void check_radius(double r) const;
};

struct ParamPoint {
    double r = 0.0;
    double theta = 0.0;
};

// First fundamental form coefficients. F vanishes identically on B_m, which
// is what makes the family intrinsically a surface of revolution.
struct FundamentalForm {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
};

Vec3 position(const SurfaceSpec& spec, ParamPoint p);
Vec3 partial_r(const SurfaceSpec& spec, ParamPoint p);
Vec3 partial_theta(const SurfaceSpec& spec, ParamPoint p);

// Closed forms E = s^2 (r^{m-2}+r^m)^2, F = 0, G = s^2 (r^{m-1}+r^{m+1})^2.
FundamentalForm fundamental_form(const SurfaceSpec& spec, ParamPoint p);

// K = -4 r^{2(2-m)} / (s^2 (1+r^2)^4); depends on r only. Unbounded at r = 0
// when m > 2 (domain error there).
double gaussian_curvature(const SurfaceSpec& spec, ParamPoint p);

// Alternate Enneper parametrisation with n-fold symmetry (n = 1 degenerates
// to a flat disc). Matches position() for m = 2, n = 2 under phi = -theta.
Vec3 enneper_alt_position(int n, double tau, double phi);

// Alternate Richmond parametrisation; pole at tau = 0. Preferred for plotting.
Vec3 richmond_alt_position(int k, double tau, double phi);

}  // namespace bour
