#include "bour/pattern.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bour/intersection.hpp"

namespace bour {

namespace {

constexpr double kPi = std::numbers::pi;

void check_gauge(const Gauge& g) {
    if (!(g.h > 0.0) || !(g.w > 0.0))
        throw std::invalid_argument("gauge needs positive stitch height and width");
}

// Continuous (unrounded) stitch count of round l at scale s.
double stitch_count_real(const SurfaceSpec& base, const Gauge& gauge, int round, double s) {
    const SurfaceSpec spec = base.with_scale(s);
    const double r = invert_radial(spec, round * gauge.h);
    return circumference(spec, r) / gauge.w;
}

}  // namespace

long round_half_away(double x) {
    return std::llround(x);
}

double resolve_scale(const SurfaceSpec& base, const Gauge& gauge, const ScalePolicy& policy) {
    check_gauge(gauge);
    if (const auto* e = std::get_if<ExplicitScale>(&policy)) {
        if (!(e->s > 0.0)) throw std::invalid_argument("explicit scale must be positive");
        return e->s;
    }
    if (const auto* fr = std::get_if<FitRound>(&policy)) {
        if (fr->round < 1) throw std::invalid_argument("fit_round needs round >= 1");
        const SurfaceSpec unit = base.with_scale(1.0);
        const double arc = radial_arc_length(unit, radial_anchor(unit), fr->r);
        if (!(arc > 0.0)) throw std::invalid_argument("fit_round target radius too small");
        return fr->round * gauge.h / arc;
    }
    const auto& fc = std::get<FitCount>(policy);
    if (fc.round < 1 || fc.stitches < 1)
        throw std::invalid_argument("fit_count needs round >= 1 and stitches >= 1");

    // The count falls towards the flat-disc limit 2*pi*l*H/W as the model
    // grows; targets at or below the limit are out of reach.
    const double flat_limit = 2.0 * kPi * fc.round * gauge.h / gauge.w;
    if (fc.stitches - 0.51 <= flat_limit)
        throw std::domain_error("fit_count target not achievable (at or below the flat-disc count)");

    auto count = [&](double s) -> double {
        try {
            return stitch_count_real(base, gauge, fc.round, s);
        } catch (const std::domain_error&) {
            // Round radius beyond r_max: the model is too small for the round,
            // which means more stitches than any in-domain scale.
            return std::numeric_limits<double>::infinity();
        }
    };

    const double target = fc.stitches;
    // The count decreases with s (a flatter model needs fewer stitches at a
    // fixed intrinsic radius, with 2*pi*l*H/W as the flat-disc limit).
    double lo = 1.0, hi = 1.0;
    for (int i = 0; count(lo) < target; ++i) {
        if (i > 200) throw std::domain_error("fit_count target not achievable");
        lo *= 0.5;
    }
    for (int i = 0; count(hi) >= target; ++i) {
        if (i > 200) throw std::domain_error("fit_count target not achievable");
        hi *= 2.0;
    }
    // Continuous solve of count(s) = target ...
    double a = lo, b = hi;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (a + b);
        (count(mid) >= target ? a : b) = mid;
    }
    // ... then walk the rounded count to its step edge: the result is the
    // largest scale at which round `round` still rounds to the target.
    double inside = a;  // count(inside) >= target, so rounds to >= target
    if (round_half_away(count(inside)) != fc.stitches)
        throw std::domain_error("fit_count target not achievable");
    double outside = inside;
    for (int i = 0; round_half_away(count(outside)) >= fc.stitches; ++i) {
        if (i > 200) throw std::domain_error("fit_count target not achievable");
        outside *= 2.0;
    }
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (inside + outside);
        (round_half_away(count(mid)) == fc.stitches ? inside : outside) = mid;
    }
    return inside;
}

int stitch_count(const SurfaceSpec& spec, const Gauge& gauge, int round) {
    check_gauge(gauge);
    if (round < 1) throw std::invalid_argument("rounds are numbered from 1");
    const double r = invert_radial(spec, round * gauge.h);
    return static_cast<int>(round_half_away(circumference(spec, r) / gauge.w));
}

PatternTable generate_pattern(const SurfaceSpec& spec, const Gauge& gauge, int rounds) {
    check_gauge(gauge);
    if (rounds < 1) throw std::invalid_argument("need at least one round");
    PatternTable table{spec, gauge, {}, 0, std::nullopt};
    table.rows.reserve(rounds);
    int prev = 0;
    for (int l = 1; l <= rounds; ++l) {
        const int n = stitch_count(spec, gauge, l);
        const int delta = n - prev;
        if (l > 1 && delta > prev && !table.warning)
            table.warning = "round " + std::to_string(l) +
                            " adds more stitches than the previous round holds; "
                            "increases must be worked more than once per stitch";
        table.rows.push_back({l, n, delta});
        table.total += n;
        prev = n;
    }
    return table;
}

PatternTable flat_disc_pattern(const Gauge& gauge, int rounds) {
    check_gauge(gauge);
    if (rounds < 1) throw std::invalid_argument("need at least one round");
    const int delta = static_cast<int>(round_half_away(2.0 * kPi * gauge.h / gauge.w));
    PatternTable table{SurfaceSpec{}, gauge, {}, 0, std::nullopt};
    if (delta < 1) {
        table.warning = "gauge too wide for a workable disc; increment rounds to zero";
    }
    table.rows.reserve(rounds);
    for (int l = 1; l <= rounds; ++l) {
        table.rows.push_back({l, l * delta, delta});
        table.total += static_cast<long long>(l) * delta;
    }
    return table;
}

int first_intersection_round(const SurfaceSpec& spec, const Gauge& gauge) {
    check_gauge(gauge);
    if (spec.m != 2.0)
        throw std::invalid_argument("intersection rounds are defined for m = 2 only");
    const double onset = radial_arc_length(spec, 0.0, enneper_first_intersection_radius());
    const double exact = onset / gauge.h;
    // Tolerate an l*H that grazes the onset arc from below by float noise.
    const int round = static_cast<int>(std::ceil(exact - 1e-9));
    return round < 1 ? 1 : round;
}

IntersectionSchedule enneper_intersection_schedule(const SurfaceSpec& spec, const Gauge& gauge,
                                                   int round_first, int round_last) {
    check_gauge(gauge);
    if (spec.m != 2.0)
        throw std::invalid_argument("intersection schedule is defined for m = 2 only");
    if (round_first < 2 || round_last < round_first)
        throw std::invalid_argument("bad schedule round range");
    if (round_first != first_intersection_round(spec, gauge))
        throw std::invalid_argument(
            "schedule must start at the first intersecting round (quarters are "
            "split from the last plain round)");

    IntersectionSchedule schedule{spec, gauge, 0, {}};
    const int n_prev = stitch_count(spec, gauge, round_first - 1);
    // Quarters share the remainder round-robin; the table follows the largest.
    schedule.quarter_start = n_prev / 4 + (n_prev % 4 ? 1 : 0);

    int prev_inner = 0;
    int prev_outer = schedule.quarter_start;
    for (int l = round_first; l <= round_last; ++l) {
        const double r = invert_radial(spec, l * gauge.h);
        const CrossingInfo arcs = enneper_section_arcs(spec, r);
        const int n_inner = static_cast<int>(round_half_away(arcs.inner_arc / gauge.w));
        const int n_outer = static_cast<int>(round_half_away(arcs.outer_arc / gauge.w));

        const int inner_growth = n_inner - prev_inner;
        const int quarter_growth = (n_inner + n_outer) - (prev_inner + prev_outer);
        if (inner_growth < 0 || quarter_growth < 0)
            throw std::runtime_error("schedule infeasible: a section shrinks at round " +
                                     std::to_string(l));

        // Split the quarter's growth between the sections in proportion to
        // their size; whatever inner growth is not an increase walks in from
        // the outer section.
        int inc_inner = static_cast<int>(round_half_away(
            static_cast<double>(quarter_growth) * n_inner / (n_inner + n_outer)));
        if (inc_inner > inner_growth) inc_inner = inner_growth;
        const int move_in = inner_growth - inc_inner;
        const int inc_outer = quarter_growth - inc_inner;

        schedule.rows.push_back({l, n_inner, move_in, inc_inner, n_outer, inc_outer});
        prev_inner = n_inner;
        prev_outer = n_outer;
    }
    return schedule;
}

std::vector<Stitch> distribute_increases(int n_prev, int delta, int offset) {
    if (n_prev < 1) throw std::invalid_argument("need at least one stitch to work into");
    if (delta < 0 || delta > n_prev)
        throw std::invalid_argument("cannot place more increases than stitches");
    std::vector<Stitch> round(static_cast<size_t>(n_prev), Stitch::plain);
    for (int j = 0; j < delta; ++j) {
        const int base = static_cast<int>(static_cast<long long>(j) * n_prev / delta);
        const int slot = (base + offset) % n_prev;
        round[static_cast<size_t>(slot < 0 ? slot + n_prev : slot)] = Stitch::increase;
    }
    return round;
}

}  // namespace bour
