#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bour {

// Adaptive Gauss-Kronrod (G7, K15) integration on [a, b]. Panels are bisected
// until each one meets a length-proportional share of the tolerance budget,
// using |K15 - G7| as the local error estimate.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol = 1e-10,
                          double rel_tol = 1e-10) {
    static constexpr double xgk[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.0};
    static constexpr double wgk[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static constexpr double wg[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

    if (!(b >= a)) throw std::invalid_argument("integration bounds out of order");
    if (a == b) return 0.0;

    auto panel = [&](double lo, double hi, double& err) {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        const double fc = f(mid);
        double k15 = wgk[7] * fc;
        double g7 = wg[3] * fc;
        for (int i = 0; i < 7; ++i) {
            const double dx = half * xgk[i];
            const double pair = f(mid - dx) + f(mid + dx);
            k15 += wgk[i] * pair;
            if (i % 2 == 1) g7 += wg[i / 2] * pair;
        }
        k15 *= half;
        g7 *= half;
        err = std::abs(k15 - g7);
        return k15;
    };

    double first_err = 0.0;
    const double whole = panel(a, b, first_err);
    const double budget = std::max(abs_tol, rel_tol * std::abs(whole));

    struct Interval {
        double lo, hi;
    };
    std::vector<Interval> stack{{a, b}};
    double sum = 0.0;
    long evaluations = 0;
    constexpr long kMaxPanels = 2000000;

    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        if (++evaluations > kMaxPanels)
            throw std::runtime_error("adaptive quadrature failed to converge");
        double err = 0.0;
        const double est = panel(iv.lo, iv.hi, err);
        if (err <= budget * (iv.hi - iv.lo) / (b - a) ||
            (iv.hi - iv.lo) < 1e-15 * (b - a)) {
            sum += est;
            continue;
        }
        const double mid = 0.5 * (iv.lo + iv.hi);
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    return sum;
}

}  // namespace bour
