#include "bour/arc_length.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bour/quadrature.hpp"

namespace bour {

namespace {

constexpr double kPi = std::numbers::pi;

// Antiderivative of the radial speed r^{m-2} + r^m, without the scale factor.
double radial_antiderivative(double m, double r) {
    return std::pow(r, m - 1.0) / (m - 1.0) + std::pow(r, m + 1.0) / (m + 1.0);
}

}  // namespace

double circumference(const SurfaceSpec& spec, double r) {
    spec.check_radius(r);
    return 2.0 * kPi * spec.scale * (std::pow(r, spec.m - 1.0) + std::pow(r, spec.m + 1.0));
}

double radial_anchor(const SurfaceSpec& spec) {
    return spec.m > 1.0 ? 0.0 : spec.r_min;
}

double radial_arc_length(const SurfaceSpec& spec, double r_a, double r_b) {
    spec.check_radius(r_a);
    spec.check_radius(r_b);
    if (r_a > r_b) throw std::invalid_argument("radial arc needs r_a <= r_b");
    if (r_a == r_b) return 0.0;
    if (r_a == 0.0 && spec.m < 1.0)
        throw std::domain_error("radial arc from r = 0 diverges for m < 1");
    return spec.scale * (radial_antiderivative(spec.m, r_b) - radial_antiderivative(spec.m, r_a));
}

double max_radial_arc(const SurfaceSpec& spec) {
    const double anchor = radial_anchor(spec);
    return spec.scale *
           (radial_antiderivative(spec.m, spec.r_max) - radial_antiderivative(spec.m, anchor));
}

double invert_radial(const SurfaceSpec& spec, double target, RootConfig cfg) {
    spec.check_radius(spec.r_min);
    if (!(cfg.abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
    if (target < 0.0) throw std::domain_error("arc length target must be non-negative");

    const double anchor = radial_anchor(spec);
    const double base = radial_antiderivative(spec.m, anchor);
    const double reach = spec.scale * (radial_antiderivative(spec.m, spec.r_max) - base);
    if (target > reach + cfg.abs_tol)
        throw std::domain_error("arc length target beyond r_max");
    if (target == 0.0) return anchor;

    auto residual = [&](double r) {
        return spec.scale * (radial_antiderivative(spec.m, r) - base) - target;
    };

    double lo = anchor;
    double hi = spec.r_max;
    double best = hi;
    double best_abs = std::abs(residual(hi));
    for (int i = 0; i < cfg.max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f = residual(mid);
        if (std::abs(f) < best_abs) {
            best = mid;
            best_abs = std::abs(f);
        }
        if (best_abs <= cfg.abs_tol) return best;
        if (f < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    if (best_abs <= cfg.abs_tol) return best;
    throw std::runtime_error("invert_radial: iteration cap exceeded");
}

double circumference_quadrature(const SurfaceSpec& spec, double r, double tol) {
    spec.check_radius(r);
    auto speed = [&](double theta) { return norm(partial_theta(spec, {r, theta})); };
    return integrate_adaptive(speed, 0.0, 2.0 * kPi, tol, tol);
}

double radial_quadrature(const SurfaceSpec& spec, double r_a, double r_b, double theta,
                         double tol) {
    spec.check_radius(r_a);
    spec.check_radius(r_b);
    if (r_a > r_b) throw std::invalid_argument("radial arc needs r_a <= r_b");
    if (r_a == r_b) return 0.0;
    if (r_a == 0.0 && spec.m < 1.0)
        throw std::domain_error("radial arc from r = 0 diverges for m < 1");
    if (r_a == 0.0) {
        // Substitute r = t^2 so the integrable endpoint singularity of
        // r^{m-2} for m < 2 becomes mild; Kronrod nodes stay interior.
        auto speed = [&](double t) {
            return 2.0 * t * norm(partial_r(spec, {t * t, theta}));
        };
        return integrate_adaptive(speed, 0.0, std::sqrt(r_b), tol, tol);
    }
    auto speed = [&](double r) { return norm(partial_r(spec, {r, theta})); };
    return integrate_adaptive(speed, r_a, r_b, tol, tol);
}

}  // namespace bour
