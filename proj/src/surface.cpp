#include "bour/surface.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bour {

namespace {

constexpr double kPi = std::numbers::pi;

bool excluded_exponent(double m) { return m == -1.0 || m == 0.0 || m == 1.0; }

void validate(const SurfaceSpec& s) {
    if (excluded_exponent(s.m))
        throw std::invalid_argument("family exponent m must avoid -1, 0 and 1");
    if (!(s.scale > 0.0)) throw std::invalid_argument("scale must be positive");
    if (!(s.r_min >= 0.0) || !(s.r_max > s.r_min))
        throw std::invalid_argument("radial domain must satisfy 0 <= r_min < r_max");
    if (s.m < 1.0 && !(s.r_min > 0.0))
        throw std::invalid_argument("m < 1 requires r_min > 0");
}

}  // namespace

SurfaceSpec SurfaceSpec::general(double m, double scale, double r_min, double r_max) {
    SurfaceSpec s{m, scale, r_min, r_max, 2.0 * kPi};
    validate(s);
    return s;
}

SurfaceSpec SurfaceSpec::enneper(int k, double scale, double r_max) {
    if (k < 1) throw std::invalid_argument("enneper family needs k >= 1");
    SurfaceSpec s{(k + 1.0) / k, scale, 0.0, r_max, 2.0 * k * kPi};
    validate(s);
    return s;
}

SurfaceSpec SurfaceSpec::richmond(int k, double scale, double r_min, double r_max) {
    if (k < 1) throw std::invalid_argument("richmond family needs k >= 1");
    SurfaceSpec s{static_cast<double>(k) / (k + 1.0), scale, r_min, r_max,
                  2.0 * (k + 1.0) * kPi};
    validate(s);
    return s;
}

SurfaceSpec SurfaceSpec::bour3(double scale) {
    SurfaceSpec s{3.0, scale, 0.0, 1.0, 2.0 * kPi};
    validate(s);
    return s;
}

SurfaceSpec SurfaceSpec::with_scale(double s) const {
    SurfaceSpec out = *this;
    out.scale = s;
    validate(out);
    return out;
}

void SurfaceSpec::check_radius(double r) const {
    validate(*this);
    if (!(r >= r_min && r <= r_max))
        throw std::domain_error("r = " + std::to_string(r) + " outside [" +
                                std::to_string(r_min) + ", " + std::to_string(r_max) + "]");
}

Vec3 position(const SurfaceSpec& spec, ParamPoint p) {
    spec.check_radius(p.r);
    const double m = spec.m;
    const double a = std::pow(p.r, m - 1.0) / (m - 1.0);
    const double b = std::pow(p.r, m + 1.0) / (m + 1.0);
    const double c = 2.0 * std::pow(p.r, m) / m;
    const double t = p.theta;
    return spec.scale * Vec3{a * std::cos((m - 1.0) * t) - b * std::cos((m + 1.0) * t),
                             -a * std::sin((m - 1.0) * t) - b * std::sin((m + 1.0) * t),
                             c * std::cos(m * t)};
}

Vec3 partial_theta(const SurfaceSpec& spec, ParamPoint p) {
    spec.check_radius(p.r);
    const double m = spec.m;
    const double lo = std::pow(p.r, m - 1.0);
    const double hi = std::pow(p.r, m + 1.0);
    const double md = std::pow(p.r, m);
    const double t = p.theta;
    return spec.scale * Vec3{-lo * std::sin((m - 1.0) * t) + hi * std::sin((m + 1.0) * t),
                             -lo * std::cos((m - 1.0) * t) - hi * std::cos((m + 1.0) * t),
                             -2.0 * md * std::sin(m * t)};
}

Vec3 partial_r(const SurfaceSpec& spec, ParamPoint p) {
    spec.check_radius(p.r);
    const double m = spec.m;
    if (p.r == 0.0 && m < 2.0)
        throw std::domain_error("radial derivative unbounded at r = 0 for m < 2");
    const double lo = std::pow(p.r, m - 2.0);
    const double hi = std::pow(p.r, m);
    const double md = std::pow(p.r, m - 1.0);
    const double t = p.theta;
    return spec.scale * Vec3{lo * std::cos((m - 1.0) * t) - hi * std::cos((m + 1.0) * t),
                             -lo * std::sin((m - 1.0) * t) - hi * std::sin((m + 1.0) * t),
                             2.0 * md * std::cos(m * t)};
}

FundamentalForm fundamental_form(const SurfaceSpec& spec, ParamPoint p) {
    spec.check_radius(p.r);
    const double m = spec.m;
    if (p.r == 0.0 && m < 2.0)
        throw std::domain_error("metric coefficient E unbounded at r = 0 for m < 2");
    const double s2 = spec.scale * spec.scale;
    const double e = std::pow(p.r, m - 2.0) + std::pow(p.r, m);
    const double g = std::pow(p.r, m - 1.0) + std::pow(p.r, m + 1.0);
    return {s2 * e * e, 0.0, s2 * g * g};
}

double gaussian_curvature(const SurfaceSpec& spec, ParamPoint p) {
    spec.check_radius(p.r);
    const double m = spec.m;
    if (p.r == 0.0 && m > 2.0)
        throw std::domain_error("curvature unbounded at r = 0 for m > 2");
    const double q = 1.0 + p.r * p.r;
    return -4.0 * std::pow(p.r, 2.0 * (2.0 - m)) /
           (spec.scale * spec.scale * q * q * q * q);
}

Vec3 enneper_alt_position(int n, double tau, double phi) {
    if (n < 1) throw std::invalid_argument("symmetry order n must be >= 1");
    if (tau < 0.0) throw std::domain_error("tau must be non-negative");
    const double p = 2.0 * n - 1.0;
    const double b = std::pow(tau, p) / p;
    return {tau * std::cos(phi) - b * std::cos(p * phi),
            tau * std::sin(phi) + b * std::sin(p * phi),
            2.0 * std::pow(tau, n) / n * std::cos(n * phi)};
}

Vec3 richmond_alt_position(int k, double tau, double phi) {
    if (k < 1) throw std::invalid_argument("richmond family needs k >= 1");
    if (!(tau > 0.0)) throw std::domain_error("tau = 0 is a pole of the parametrisation");
    const double p = 2.0 * k + 1.0;
    const double b = std::pow(tau, p) / p;
    return {-std::cos(phi) / tau - b * std::cos(p * phi),
            -std::sin(phi) / tau - b * std::sin(p * phi),
            2.0 * std::pow(tau, k) / k * std::cos(k * phi)};
}

}  // namespace bour
