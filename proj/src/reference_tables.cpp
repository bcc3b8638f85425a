#include "bour/reference_tables.hpp"

#include <cmath>
#include <stdexcept>

#include "bour/intersection.hpp"

namespace bour::reference {

const std::vector<PatternColumn>& table1_columns() {
    static const std::vector<PatternColumn> columns = {
        {0.40, 0.5,
         {5, 11, 18, 25, 34, 43, 53, 63, 74, 85, 96, 107, 119, 131, 143, 155, 167, 180},
         1512},
        {0.45, 0.5,
         {6, 12, 20, 29, 39, 49, 61, 73, 85, 97, 110, 123, 136, 150, 164, 178, 192},
         1525},
        {0.50, 0.5,
         {6, 14, 23, 33, 44, 56, 69, 82, 96, 110, 124, 139, 154, 169, 184, 200},
         1504},
    };
    return columns;
}

const PatternColumn& appendix_pre_rounds() {
    static const PatternColumn column = {0.45, 0.5, {6, 14, 24, 35, 46, 59, 72, 86, 100}, 442};
    return column;
}

const std::vector<IntersectionRow>& appendix_schedule_rows() {
    // {round, n_inner, move_in, inc_inner, n_outer, inc_outer}, per quarter.
    static const std::vector<IntersectionRow> rows = {
        {10, 2, 2, 0, 26, 3},  {11, 7, 4, 1, 25, 3},  {12, 10, 2, 1, 26, 3},
        {13, 12, 1, 1, 27, 2}, {14, 15, 1, 2, 28, 2}, {15, 17, 1, 1, 29, 2},
        {16, 20, 1, 2, 31, 3}, {17, 22, 1, 1, 32, 2}, {18, 25, 1, 2, 33, 2},
        {19, 27, 1, 1, 35, 3}, {20, 30, 1, 2, 36, 2}, {21, 32, 1, 1, 37, 2},
        {22, 34, 0, 2, 39, 2}, {23, 37, 1, 2, 40, 2}, {24, 39, 0, 2, 42, 2},
        {25, 42, 1, 2, 43, 2}, {26, 44, 0, 2, 44, 1},
    };
    return rows;
}

long long appendix_total_stitches() { return 4394; }

PatternTable make_table1_pattern(double h_cm) {
    for (const PatternColumn& column : table1_columns()) {
        if (std::abs(column.h_cm - h_cm) < 1e-9) {
            const Gauge gauge{h_cm, column.w_cm};
            const int rounds = static_cast<int>(column.stitches.size());
            const SurfaceSpec base = SurfaceSpec::enneper(1);
            const double s = resolve_scale(
                base, gauge, FitRound{rounds, enneper_first_intersection_radius()});
            return generate_pattern(base.with_scale(s), gauge, rounds);
        }
    }
    throw std::invalid_argument("no reference column for this stitch height");
}

AppendixModel make_appendix_model(double h_delta) {
    const PatternColumn& pre_ref = appendix_pre_rounds();
    const Gauge gauge{pre_ref.h_cm + h_delta, pre_ref.w_cm};
    const SurfaceSpec base = SurfaceSpec::enneper(1);
    const int fit_round_index = static_cast<int>(pre_ref.stitches.size());  // 9
    const double s =
        resolve_scale(base, gauge, FitCount{fit_round_index, pre_ref.stitches.back()});
    const SurfaceSpec spec = base.with_scale(s);

    AppendixModel model{spec, gauge, {}, {}};
    model.pre = generate_pattern(spec, gauge, fit_round_index);
    const int first = first_intersection_round(spec, gauge);
    const int last = static_cast<int>(appendix_schedule_rows().back().round);
    model.schedule = enneper_intersection_schedule(spec, gauge, first, last);
    return model;
}

}  // namespace bour::reference
