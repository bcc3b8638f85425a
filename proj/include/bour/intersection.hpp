#pragma once

#include <array>
#include <utility>

#include "bour/surface.hpp"

namespace bour {

// Crossing data for one round of the self-intersecting Enneper model (m = 2).
// The round splits into `sections` inner/outer pairs whose boundary arcs sum
// back to the full circumference.
struct CrossingInfo {
    double theta_cr = 0.0;  // crossing angle, radians
    double inner_arc = 0.0; // one inner-section boundary arc, cm
    double outer_arc = 0.0; // one outer-section boundary arc, cm
    int sections = 4;
};

// Parameter radius sqrt(3) at which the m = 2 surface first meets itself.
double enneper_first_intersection_radius();

// Radius sqrt(3 (1 + sqrt 2)) where inner and outer section arcs balance.
double enneper_balance_radius();

// Crossing angle from x(r, theta) = x(r, pi - theta); zero at r = sqrt(3),
// increasing towards pi/6. Evaluated through asin(sqrt(r^2 - 3) / (2r)) so
// the onset radius lands exactly on zero.
double enneper_crossing_angle(double r);

// Inner/outer boundary arc lengths of the four section pairs at radius r.
CrossingInfo enneper_section_arcs(const SurfaceSpec& spec, double r);

// The pair (h(r, theta_cr), h(r, pi - theta_cr)); the two points coincide.
std::pair<Vec3, Vec3> enneper_crossing_coincidence(const SurfaceSpec& spec, double r);

// Enneper-type crossing angle of the Richmond family (k = 1), measured from
// the 2*pi ray: 2 asin((sqrt 3 / 2) sqrt(1 + 1/r^2)), so pi at r = sqrt(3).
double richmond_crossing_angle(double r);

// The B_3 model splits along three rays into six equal sectors; stitches
// never migrate between them.
struct SectorLayout {
    int count = 6;
    double width = 0.0;                   // pi/3
    std::array<double, 6> boundaries{};   // theta values where z = 0
    bool stitches_migrate = false;
};
SectorLayout bour3_sectors();

}  // namespace bour
