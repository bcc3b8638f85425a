#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bour/arc_length.hpp"
#include "bour/surface.hpp"

namespace bour {

// Physical size of one stitch; drives every discretisation step.
struct Gauge {
    double h = 0.0;  // stitch height, cm
    double w = 0.0;  // stitch width, cm
};

// Round half away from zero; ties like 99.5 go up.
long round_half_away(double x);

struct RoundRow {
    int round = 0;     // l >= 1
    int stitches = 0;  // N(l)
    int delta = 0;     // N(l) - N(l-1), with N(0) = 0
};

struct PatternTable {
    SurfaceSpec spec;
    Gauge gauge;
    std::vector<RoundRow> rows;
    long long total = 0;
    std::optional<std::string> warning;
};

// Scale selection policies. fit_round pins round `round` to parameter radius
// r; fit_count picks the largest scale at which round `round` still needs
// `stitches` stitches.
struct ExplicitScale {
    double s = 1.0;
};
struct FitRound {
    int round = 1;
    double r = 0.0;
};
struct FitCount {
    int round = 1;
    int stitches = 0;
};
using ScalePolicy = std::variant<ExplicitScale, FitRound, FitCount>;

double resolve_scale(const SurfaceSpec& base, const Gauge& gauge, const ScalePolicy& policy);

// Stitches on round l: invert l*H to a parameter radius, divide the round
// circumference by the stitch width, round to nearest.
int stitch_count(const SurfaceSpec& spec, const Gauge& gauge, int round);

PatternTable generate_pattern(const SurfaceSpec& spec, const Gauge& gauge, int rounds);

// Plain disc baseline: a constant increment of round(2*pi*H/W) stitches per
// round, the usual "6 stitches in a loop, add 6 every round" rule for H = W.
PatternTable flat_disc_pattern(const Gauge& gauge, int rounds);

// Per-quarter bookkeeping for one round of the intersecting Enneper model.
// Totals only grow by increases; stitches that change section are move-ins.
struct IntersectionRow {
    int round = 0;
    int n_inner = 0;
    int move_in = 0;
    int inc_inner = 0;
    int n_outer = 0;
    int inc_outer = 0;
};

struct IntersectionSchedule {
    SurfaceSpec spec;
    Gauge gauge;
    int quarter_start = 0;  // per-quarter stitches on the last plain round
    std::vector<IntersectionRow> rows;
};

// First round l with l*H at or past the radial arc to r = sqrt(3).
int first_intersection_round(const SurfaceSpec& spec, const Gauge& gauge);

// Rounds [round_first, round_last] of the m = 2 intersecting model, split
// into four equal quarters from the preceding round onwards. round_first must
// be the first intersecting round.
IntersectionSchedule enneper_intersection_schedule(const SurfaceSpec& spec, const Gauge& gauge,
                                                   int round_first, int round_last);

enum class Stitch : unsigned char { plain, increase };

// Even placement of `delta` increases over `n_prev` stitches: gap sizes
// differ by at most one, and `offset` rotates the whole placement so rounds
// do not stack their increases.
std::vector<Stitch> distribute_increases(int n_prev, int delta, int offset);

}  // namespace bour
