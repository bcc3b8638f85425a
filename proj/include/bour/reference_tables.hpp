#pragma once

#include <vector>

#include "bour/pattern.hpp"

namespace bour::reference {

// Known-good stitch tables for the 2-fold Enneper model, embedded so that
// `validate` runs offline. Per-round values are the ground truth; the
// reported totals are kept verbatim even where they disagree with the
// column sums by a few stitches.
struct PatternColumn {
    double h_cm;
    double w_cm;
    std::vector<int> stitches;  // N(l) for l = 1..rounds
    int reported_total;
};

// Three gauges (H = 0.4, 0.45, 0.5 cm at W = 0.5 cm), scaled so the last
// round lands on the first self-intersection radius sqrt(3).
const std::vector<PatternColumn>& table1_columns();

// Pre-intersection rounds of the large intersecting model (H = 0.45, W = 0.5,
// scale fitted so round 9 holds 100 stitches).
const PatternColumn& appendix_pre_rounds();

// Per-quarter inner/outer bookkeeping for rounds 10..26 of the same model.
const std::vector<IntersectionRow>& appendix_schedule_rows();

// Grand total of the intersecting model: pre-rounds plus 4x the quarters.
long long appendix_total_stitches();

// Generation recipes matching the reference data above.
PatternTable make_table1_pattern(double h_cm);
struct AppendixModel {
    SurfaceSpec spec;
    Gauge gauge;
    PatternTable pre;                // rounds 1..9
    IntersectionSchedule schedule;   // rounds 10..26
};
AppendixModel make_appendix_model(double h_delta = 0.0);

}  // namespace bour::reference
