#include "bour/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace bour {

namespace {

void check_grid(const SurfaceSpec& spec, const GridSpec& g) {
    if (g.r_steps < 1 || g.theta_steps < 3)
        throw std::invalid_argument("grid needs r_steps >= 1 and theta_steps >= 3");
    if (!(g.r_hi > g.r_lo) || !(g.theta_hi > g.theta_lo))
        throw std::invalid_argument("grid ranges must be ordered");
    spec.check_radius(g.r_lo);
    spec.check_radius(g.r_hi);
}

void write_vertex(std::ostream& out, Vec3 v) {
    auto clean = [](double x) { return x == 0.0 ? 0.0 : x; };  // drop -0
    char line[96];
    std::snprintf(line, sizeof(line), "v %.9g %.9g %.9g\n", clean(v.x), clean(v.y),
                  clean(v.z));
    out << line;
}

template <class Sample>
TriangleMesh sample_grid(const GridSpec& grid, double weld_period, Sample&& at) {
    const double span = grid.theta_hi - grid.theta_lo;
    const bool welded = std::abs(span - weld_period) <= 1e-9 * weld_period;
    const int cols = welded ? grid.theta_steps : grid.theta_steps + 1;

    TriangleMesh mesh;
    mesh.vertices.reserve(static_cast<size_t>(grid.r_steps + 1) * cols);
    for (int i = 0; i <= grid.r_steps; ++i) {
        const double r = grid.r_lo + (grid.r_hi - grid.r_lo) * i / grid.r_steps;
        for (int j = 0; j < cols; ++j) {
            const double theta = grid.theta_lo + span * j / grid.theta_steps;
            mesh.vertices.push_back(at(r, theta));
        }
    }
    mesh.triangles.reserve(static_cast<size_t>(grid.r_steps) * grid.theta_steps * 2);
    for (int i = 0; i < grid.r_steps; ++i) {
        for (int j = 0; j < grid.theta_steps; ++j) {
            const int jn = welded ? (j + 1) % cols : j + 1;
            const int a = i * cols + j;
            const int b = (i + 1) * cols + j;
            const int c = (i + 1) * cols + jn;
            const int d = i * cols + jn;
            mesh.triangles.push_back({a, b, c});
            mesh.triangles.push_back({a, c, d});
        }
    }
    return mesh;
}

}  // namespace

TriangleMesh sample_mesh(const SurfaceSpec& spec, const GridSpec& grid) {
    check_grid(spec, grid);
    return sample_grid(grid, spec.theta_period,
                       [&](double r, double theta) { return position(spec, {r, theta}); });
}

TriangleMesh sample_richmond_mesh(int k, double scale, const GridSpec& grid) {
    if (k < 1) throw std::invalid_argument("richmond family needs k >= 1");
    if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
    if (grid.r_steps < 1 || grid.theta_steps < 3)
        throw std::invalid_argument("grid needs r_steps >= 1 and theta_steps >= 3");
    if (!(grid.r_hi > grid.r_lo) || !(grid.theta_hi > grid.theta_lo))
        throw std::invalid_argument("grid ranges must be ordered");
    if (!(grid.r_lo > 0.0)) throw std::domain_error("tau = 0 is a pole of the parametrisation");
    constexpr double two_pi = 6.283185307179586476925286766559;
    return sample_grid(grid, two_pi, [&](double tau, double phi) {
        return scale * richmond_alt_position(k, tau, phi);
    });
}

std::vector<Vec3> sample_round_polyline(const SurfaceSpec& spec, double r, int steps) {
    if (steps < 3) throw std::invalid_argument("a round needs at least 3 segments");
    spec.check_radius(r);
    std::vector<Vec3> points;
    points.reserve(static_cast<size_t>(steps) + 1);
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (int j = 0; j <= steps; ++j)
        points.push_back(position(spec, {r, two_pi * j / steps}));
    return points;
}

std::vector<Vec3> sample_radial_polyline(const SurfaceSpec& spec, double theta, double r_lo,
                                         double r_hi, int steps) {
    if (steps < 1) throw std::invalid_argument("polyline needs at least 1 segment");
    if (!(r_hi > r_lo)) throw std::invalid_argument("radial range must be ordered");
    spec.check_radius(r_lo);
    spec.check_radius(r_hi);
    std::vector<Vec3> points;
    points.reserve(static_cast<size_t>(steps) + 1);
    for (int j = 0; j <= steps; ++j)
        points.push_back(position(spec, {r_lo + (r_hi - r_lo) * j / steps, theta}));
    return points;
}

double polyline_length(const std::vector<Vec3>& points) {
    double total = 0.0;
    for (size_t i = 1; i < points.size(); ++i) total += distance(points[i - 1], points[i]);
    return total;
}

void write_obj(const TriangleMesh& mesh, std::ostream& out) {
    for (const Vec3& v : mesh.vertices) write_vertex(out, v);
    for (const auto& t : mesh.triangles)
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

void write_obj(const std::vector<Vec3>& polyline, std::ostream& out) {
    for (const Vec3& v : polyline) write_vertex(out, v);
    out << 'l';
    for (size_t i = 1; i <= polyline.size(); ++i) out << ' ' << i;
    out << '\n';
}

}  // namespace bour
