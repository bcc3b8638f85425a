#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "bour/surface.hpp"

namespace bour {

struct GridSpec {
    int r_steps = 1;
    int theta_steps = 3;
    double r_lo = 0.0;
    double r_hi = 1.0;
    double theta_lo = 0.0;
    double theta_hi = 0.0;
};

struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;  // 0-based indices
};

// Regular (r, theta) grid sampled through position(). When the theta range
// spans the surface's full period the seam column is welded instead of
// duplicated.
TriangleMesh sample_mesh(const SurfaceSpec& spec, const GridSpec& grid);

// Richmond plotting grid through richmond_alt_position (the cleaner form for
// figures); grid ranges are (tau, phi), seam welded on a full 2*pi turn.
TriangleMesh sample_richmond_mesh(int k, double scale, const GridSpec& grid);

// One full 2*pi turn at radius r, steps segments, steps+1 points.
std::vector<Vec3> sample_round_polyline(const SurfaceSpec& spec, double r, int steps);

// Radial curve at fixed theta from r_lo to r_hi, steps segments.
std::vector<Vec3> sample_radial_polyline(const SurfaceSpec& spec, double theta, double r_lo,
                                         double r_hi, int steps);

double polyline_length(const std::vector<Vec3>& points);

// Plain text OBJ, 9 significant digits, deterministic ordering.
void write_obj(const TriangleMesh& mesh, std::ostream& out);
void write_obj(const std::vector<Vec3>& polyline, std::ostream& out);

}  // namespace bour
