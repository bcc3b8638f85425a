#include "bour/render.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bour {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_envelope(const SurfaceSpec& spec, const Gauge& gauge) {
    ordered_json doc;
    doc["spec"] = {{"m", spec.m}, {"s", spec.scale}, {"r_min", spec.r_min},
                   {"r_max", spec.r_max}};
    doc["gauge"] = {{"h_cm", gauge.h}, {"w_cm", gauge.w}};
    return doc;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string render(const PatternTable& table, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::csv:
            out << "round,stitches,delta\n";
            for (const RoundRow& row : table.rows)
                out << row.round << ',' << row.stitches << ',' << row.delta << '\n';
            break;
        case OutputFormat::text:
            for (const RoundRow& row : table.rows) {
                if (row.round == 1)
                    out << "Round 1: " << row.stitches << " sts (into a loop)\n";
                else
                    out << "Round " << row.round << ": " << row.stitches << " sts (+"
                        << row.delta << " evenly spaced)\n";
            }
            out << "Total: " << table.total << " sts\n";
            if (table.warning) out << "Note: " << *table.warning << '\n';
            break;
        case OutputFormat::json: {
            ordered_json doc = json_envelope(table.spec, table.gauge);
            doc["rows"] = ordered_json::array();
            for (const RoundRow& row : table.rows)
                doc["rows"].push_back({{"round", row.round},
                                       {"stitches", row.stitches},
                                       {"delta", row.delta}});
            doc["total"] = table.total;
            if (table.warning) doc["warning"] = *table.warning;
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

std::string render(const IntersectionSchedule& schedule, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::csv:
            out << "round,n_inner,move_in,inc_inner,n_outer,inc_outer\n";
            for (const IntersectionRow& r : schedule.rows)
                out << r.round << ',' << r.n_inner << ',' << r.move_in << ',' << r.inc_inner
                    << ',' << r.n_outer << ',' << r.inc_outer << '\n';
            break;
        case OutputFormat::text:
            out << "Split into 4 quarters of " << schedule.quarter_start
                << " sts; per-quarter counts follow.\n";
            for (const IntersectionRow& r : schedule.rows)
                out << "Round " << r.round << ": inner " << r.n_inner << " (+" << r.inc_inner
                    << " inc, +" << r.move_in << " moved in), outer " << r.n_outer << " (+"
                    << r.inc_outer << " inc)\n";
            break;
        case OutputFormat::json: {
            ordered_json doc = json_envelope(schedule.spec, schedule.gauge);
            doc["quarter_start"] = schedule.quarter_start;
            doc["rows"] = ordered_json::array();
            long long total = 0;
            for (const IntersectionRow& r : schedule.rows) {
                doc["rows"].push_back({{"round", r.round},
                                       {"n_inner", r.n_inner},
                                       {"move_in", r.move_in},
                                       {"inc_inner", r.inc_inner},
                                       {"n_outer", r.n_outer},
                                       {"inc_outer", r.inc_outer}});
                total += 4LL * (r.n_inner + r.n_outer);
            }
            doc["total"] = total;
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

}  // namespace bour
