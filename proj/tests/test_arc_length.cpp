#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "bour/arc_length.hpp"

using namespace bour;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

// Test-local root finder, independent of invert_radial: plain bisection on
// the closed-form arc length.
double bisect_radius(const SurfaceSpec& spec, double target) {
    double lo = radial_anchor(spec), hi = spec.r_max;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (radial_arc_length(spec, radial_anchor(spec), mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}
}  // namespace

TEST_CASE("circumference closed form") {
    const SurfaceSpec enneper = SurfaceSpec::enneper(1);
    CHECK(circumference(enneper, 1.0) == doctest::Approx(4.0 * kPi).epsilon(1e-13));
    CHECK(circumference(enneper, kSqrt3) ==
          doctest::Approx(8.0 * kSqrt3 * kPi).epsilon(1e-13));
    CHECK(circumference(SurfaceSpec::bour3(), 1e-6) < 1e-5);
    // Scale is a plain prefactor.
    CHECK(circumference(enneper.with_scale(2.5), 1.3) ==
          doctest::Approx(2.5 * circumference(enneper, 1.3)).epsilon(1e-15));
}

TEST_CASE("radial arc length closed form") {
    const SurfaceSpec enneper = SurfaceSpec::enneper(1);
    CHECK(radial_arc_length(enneper, 0.0, kSqrt3) ==
          doctest::Approx(2.0 * kSqrt3).epsilon(1e-13));
    CHECK(radial_arc_length(enneper, 0.8, 0.8) == 0.0);

    const SurfaceSpec richmond = SurfaceSpec::richmond(1, 1.0, 0.1, 6.0);
    CHECK(radial_arc_length(richmond, 1.0, 4.0) ==
          doctest::Approx(17.0 / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(radial_arc_length(richmond, 4.0, 1.0), std::invalid_argument);
}

TEST_CASE("scale covariance is exact by construction") {
    const SurfaceSpec unit = SurfaceSpec::enneper(1);
    const SurfaceSpec scaled = unit.with_scale(2.2084);
    for (double r : {0.3, 1.0, 2.5}) {
        CHECK(radial_arc_length(scaled, 0.0, r) == 2.2084 * radial_arc_length(unit, 0.0, r));
    }
}

TEST_CASE("quadrature oracle agrees with the closed forms") {
    const std::vector<SurfaceSpec> specs = {
        SurfaceSpec::richmond(1, 1.0, 0.1, 6.0),  // m = 1/2
        SurfaceSpec::enneper(2),                  // m = 3/2
        SurfaceSpec::enneper(1),                  // m = 2
        SurfaceSpec::general(3.0, 1.0, 0.0, 6.0),
    };
    for (const SurfaceSpec& spec : specs) {
        for (double r : {0.25, 0.5, 1.0, 1.7, 2.5}) {
            if (r < spec.r_min) continue;
            CHECK(circumference_quadrature(spec, r) ==
                  doctest::Approx(circumference(spec, r)).epsilon(1e-9));
            const double anchor = radial_anchor(spec);
            CHECK(radial_quadrature(spec, anchor, r, 0.0) ==
                  doctest::Approx(radial_arc_length(spec, anchor, r)).epsilon(1e-9));
        }
    }
}

TEST_CASE("quadrature oracle spot values") {
    const SurfaceSpec enneper = SurfaceSpec::enneper(1);
    CHECK(circumference_quadrature(enneper, 1.0) == doctest::Approx(4.0 * kPi).epsilon(1e-10));

    const SurfaceSpec b3 = SurfaceSpec::bour3();
    CHECK(circumference_quadrature(b3, 0.9) ==
          doctest::Approx(2.0 * kPi * (0.81 + 0.6561)).epsilon(1e-10));

    // The radial arc cannot depend on the ray it is measured along.
    const SurfaceSpec richmond = SurfaceSpec::richmond(1, 1.0, 0.1, 6.0);
    CHECK(radial_quadrature(richmond, 1.0, 4.0, 0.0) ==
          doctest::Approx(radial_quadrature(richmond, 1.0, 4.0, 2.0)).epsilon(1e-9));
}

TEST_CASE("invert_radial meets its residual tolerance") {
    const SurfaceSpec enneper = SurfaceSpec::enneper(1);

    const double r = invert_radial(enneper, 0.45);
    CHECK(std::abs(radial_arc_length(enneper, 0.0, r) - 0.45) < 1e-10);
    CHECK(r == doctest::Approx(bisect_radius(enneper, 0.45)).epsilon(1e-8));
    CHECK(r == doctest::Approx(0.4245).epsilon(1e-4));

    CHECK(invert_radial(enneper, 2.0 * kSqrt3) == doctest::Approx(kSqrt3).epsilon(1e-10));
    CHECK(invert_radial(enneper, 0.0) == 0.0);

    CHECK_THROWS_AS(invert_radial(enneper, -1.0), std::domain_error);
    CHECK_THROWS_AS(invert_radial(enneper, max_radial_arc(enneper) + 1.0), std::domain_error);
}

TEST_CASE("inversion round-trips and stays monotone") {
    const std::vector<SurfaceSpec> specs = {
        SurfaceSpec::richmond(1, 1.0, 0.1, 6.0),
        SurfaceSpec::enneper(2),
        SurfaceSpec::enneper(1),
        SurfaceSpec::general(3.0, 1.0, 0.0, 6.0),
    };
    for (const SurfaceSpec& spec : specs) {
        double prev_r = -1.0;
        for (double r : {0.2, 0.5, 0.9, 1.4, 2.0, 3.1}) {
            if (r < spec.r_min) continue;
            const double anchor = radial_anchor(spec);
            const double arc = radial_arc_length(spec, anchor, r);
            const double back = invert_radial(spec, arc);
            CHECK(back == doctest::Approx(r).epsilon(1e-8));
            CHECK(back > prev_r);  // increasing targets give increasing radii
            prev_r = back;
        }
    }
}
