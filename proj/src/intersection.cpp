#include "bour/intersection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bour/arc_length.hpp"

namespace bour {

namespace {

constexpr double kPi = std::numbers::pi;

void require_enneper2(const SurfaceSpec& spec) {
    if (spec.m != 2.0)
        throw std::invalid_argument("intersection sections are defined for m = 2 only");
}

// sin(theta_cr)^2 = (r^2 - 3) / (4 r^2); tolerates r^2 - 3 ~ -ulp at onset.
double crossing_sine_squared(double r) {
    double t = r * r - 3.0;
    if (t < -1e-12) throw std::domain_error("no self-intersection below r = sqrt(3)");
    if (t < 0.0) t = 0.0;
    return t / (4.0 * r * r);
}

}  // namespace

double enneper_first_intersection_radius() { return std::sqrt(3.0); }

double enneper_balance_radius() { return std::sqrt(3.0 * (1.0 + std::sqrt(2.0))); }

double enneper_crossing_angle(double r) {
    return std::asin(std::sqrt(crossing_sine_squared(r)));
}

CrossingInfo enneper_section_arcs(const SurfaceSpec& spec, double r) {
    require_enneper2(spec);
    spec.check_radius(r);
    const double theta = enneper_crossing_angle(r);
    const double ring = spec.scale * (r + r * r * r);  // r^{m-1} + r^{m+1} at m = 2
    return {theta, 2.0 * theta * ring, (kPi / 2.0 - 2.0 * theta) * ring, 4};
}

std::pair<Vec3, Vec3> enneper_crossing_coincidence(const SurfaceSpec& spec, double r) {
    require_enneper2(spec);
    spec.check_radius(r);
    const double theta = enneper_crossing_angle(r);
    return {position(spec, {r, theta}), position(spec, {r, kPi - theta})};
}

double richmond_crossing_angle(double r) {
    // 2 asin((sqrt3/2) sqrt(1 + 1/r^2)) rewritten through the complementary
    // angle so the onset value is exactly pi.
    return kPi - 2.0 * std::asin(std::sqrt(crossing_sine_squared(r)));
}

SectorLayout bour3_sectors() {
    SectorLayout out;
    out.count = 6;
    out.width = kPi / 3.0;
    for (int k = 0; k < 6; ++k) out.boundaries[k] = kPi / 6.0 + k * kPi / 3.0;
    out.stitches_migrate = false;
    return out;
}

}  // namespace bour
