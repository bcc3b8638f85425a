#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "bour/arc_length.hpp"
#include "bour/intersection.hpp"

using namespace bour;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);
}  // namespace

TEST_CASE("first intersection radius") {
    CHECK(enneper_first_intersection_radius() == doctest::Approx(kSqrt3).epsilon(1e-15));

    const SurfaceSpec enneper = SurfaceSpec::enneper(1);
    const Vec3 p = position(enneper, {enneper_first_intersection_radius(), 0.0});
    CHECK(std::abs(p.x) < 1e-12);
    CHECK(std::abs(p.y) < 1e-12);
    CHECK(radial_arc_length(enneper, 0.0, enneper_first_intersection_radius()) ==
          doctest::Approx(2.0 * kSqrt3).epsilon(1e-13));
}

TEST_CASE("crossing angle onset, growth and limit") {
    CHECK(enneper_crossing_angle(kSqrt3) == 0.0);
    CHECK(enneper_crossing_angle(2.0) == doctest::Approx(0.2526802551).epsilon(1e-9));
    CHECK(enneper_crossing_angle(enneper_balance_radius()) ==
          doctest::Approx(kPi / 8.0).epsilon(1e-12));
    CHECK_THROWS_AS(enneper_crossing_angle(1.7), std::domain_error);

    // Agrees with the raw arccos form away from the onset.
    for (double r : {1.9, 2.0, 2.7, 3.0, 5.0}) {
        const double direct = std::acos(std::sqrt(3.0) / 2.0 * std::sqrt(1.0 + 1.0 / (r * r)));
        CHECK(enneper_crossing_angle(r) == doctest::Approx(direct).epsilon(1e-12));
    }

    double prev = 0.0;
    for (double r = 1.8; r < 50.0; r *= 1.4) {
        const double theta = enneper_crossing_angle(r);
        CHECK(theta > prev);
        CHECK(theta < kPi / 6.0);
        prev = theta;
    }
    CHECK(enneper_crossing_angle(1e8) == doctest::Approx(kPi / 6.0).epsilon(1e-8));
}

TEST_CASE("section arcs split the circumference") {
    const SurfaceSpec enneper = SurfaceSpec::enneper(1);

    const CrossingInfo onset = enneper_section_arcs(enneper, kSqrt3);
    CHECK(onset.inner_arc == 0.0);
    CHECK(onset.outer_arc == doctest::Approx(kPi / 2.0 * 4.0 * kSqrt3).epsilon(1e-13));
    CHECK(onset.sections == 4);

    const CrossingInfo at2 = enneper_section_arcs(enneper, 2.0);
    CHECK(4.0 * (at2.inner_arc + at2.outer_arc) ==
          doctest::Approx(circumference(enneper, 2.0)).epsilon(1e-12));
    CHECK(circumference(enneper, 2.0) == doctest::Approx(2.0 * kPi * 10.0).epsilon(1e-13));

    for (double r : {1.8, 2.2, 2.69, 3.5, 4.0}) {
        const CrossingInfo info = enneper_section_arcs(enneper, r);
        CHECK(4.0 * (info.inner_arc + info.outer_arc) ==
              doctest::Approx(circumference(enneper, r)).epsilon(1e-10));
    }

    CHECK_THROWS_AS(enneper_section_arcs(enneper, 1.5), std::domain_error);
    CHECK_THROWS_AS(enneper_section_arcs(SurfaceSpec::bour3(), 0.5), std::invalid_argument);
}

TEST_CASE("inner and outer sections balance at sqrt(3(1+sqrt 2))") {
    const SurfaceSpec enneper = SurfaceSpec::enneper(1);
    CHECK(enneper_balance_radius() == doctest::Approx(2.6912).epsilon(1e-4));

    auto imbalance = [&](double r) {
        const CrossingInfo info = enneper_section_arcs(enneper, r);
        return info.inner_arc - info.outer_arc;
    };
    CHECK(imbalance(2.6) < 0.0);
    CHECK(imbalance(2.8) > 0.0);

    double lo = 2.6, hi = 2.8;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (imbalance(mid) < 0.0 ? lo : hi) = mid;
    }
    CHECK(std::abs(0.5 * (lo + hi) - enneper_balance_radius()) < 1e-9);
}

TEST_CASE("the crossing really is a coincidence in space") {
    const SurfaceSpec enneper = SurfaceSpec::enneper(1);
    for (double r : {1.8, 2.0, 2.5, 3.0, 4.0}) {
        const auto [a, b] = enneper_crossing_coincidence(enneper, r);
        CHECK(distance(a, b) < 1e-9);
    }
    const auto [a, b] = enneper_crossing_coincidence(enneper, kSqrt3);
    CHECK(std::abs(a.x) < 1e-12);
    CHECK(std::abs(a.y) < 1e-12);
    CHECK(distance(a, b) < 1e-12);
    CHECK_THROWS_AS(enneper_crossing_coincidence(enneper, 1.0), std::domain_error);
}

TEST_CASE("Richmond crossing angle") {
    CHECK(richmond_crossing_angle(kSqrt3) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(richmond_crossing_angle(2.0) == doctest::Approx(2.6362322).epsilon(1e-7));
    CHECK(richmond_crossing_angle(3.0) == doctest::Approx(2.3005241).epsilon(1e-7));
    CHECK_THROWS_AS(richmond_crossing_angle(1.6), std::domain_error);

    // Same formula as 2 asin((sqrt3/2) sqrt(1 + 1/r^2)) away from the onset.
    for (double r : {2.0, 2.5, 4.0}) {
        const double direct =
            2.0 * std::asin(std::sqrt(3.0) / 2.0 * std::sqrt(1.0 + 1.0 / (r * r)));
        CHECK(richmond_crossing_angle(r) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("B_3 sector layout") {
    const SectorLayout layout = bour3_sectors();
    CHECK(layout.count == 6);
    CHECK(layout.width == doctest::Approx(kPi / 3.0).epsilon(1e-15));
    CHECK_FALSE(layout.stitches_migrate);

    const SurfaceSpec b3 = SurfaceSpec::bour3();
    for (int k = 0; k < 6; ++k) {
        CHECK(layout.boundaries[k] ==
              doctest::Approx(kPi / 6.0 + k * kPi / 3.0).epsilon(1e-15));
        // The rays live in the z = 0 plane.
        const Vec3 p = position(b3, {0.8, layout.boundaries[k]});
        CHECK(std::abs(p.z) < 1e-12);
    }
}
