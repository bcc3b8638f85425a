#pragma once

#include <cmath>
#include <cstdint>

#include "bour/surface.hpp"

namespace bour::testing {

// Small deterministic generator so property tests are reproducible.
class Xorshift {
  public:
    explicit Xorshift(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    double uniform(double lo, double hi) {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        const double unit = static_cast<double>(state_ >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

  private:
    std::uint64_t state_;
};

// Finite-difference Gaussian curvature from the metric alone (Brioschi form
// for an orthogonal metric that depends on r only):
//   K = -1/(2 sqrt(EG)) d/dr ( G_r / sqrt(EG) ).
// Uses nested central differences on E and G, independent of the closed-form
// curvature expression.
inline double curvature_from_metric(const SurfaceSpec& spec, double r, double h = 0.0) {
    if (h == 0.0) h = 2e-4 * std::max(1.0, r);
    auto eg = [&](double x) { return fundamental_form(spec, {x, 0.0}); };
    auto phi = [&](double x) {
        const FundamentalForm f = eg(x);
        const double g_r = (eg(x + h).G - eg(x - h).G) / (2.0 * h);
        return g_r / std::sqrt(f.E * f.G);
    };
    const FundamentalForm f = eg(r);
    return -(phi(r + h) - phi(r - h)) / (2.0 * h) / (2.0 * std::sqrt(f.E * f.G));
}

}  // namespace bour::testing
