#include <stdexcept>

#include <doctest.h>
#include <json.hpp>

#include "bour/reference_tables.hpp"
#include "bour/render.hpp"

using namespace bour;

TEST_CASE("format names") {
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("pattern CSV layout") {
    PatternTable table;
    table.spec = SurfaceSpec::enneper(1);
    table.gauge = {0.5, 0.5};
    table.rows = {{1, 6, 6}, {2, 12, 6}};
    table.total = 18;

    CHECK(render(table, OutputFormat::csv) ==
          "round,stitches,delta\n"
          "1,6,6\n"
          "2,12,6\n");
}

TEST_CASE("pattern text layout") {
    PatternTable table;
    table.spec = SurfaceSpec::enneper(1);
    table.gauge = {0.5, 0.5};
    table.rows = {{1, 6, 6}, {2, 12, 6}};
    table.total = 18;

    const std::string text = render(table, OutputFormat::text);
    CHECK(text.find("Round 2: 12 sts (+6 evenly spaced)\n") != std::string::npos);
    CHECK(text.find("Total: 18 sts\n") != std::string::npos);
}

TEST_CASE("pattern JSON round-trips the fields") {
    const PatternTable table = reference::make_table1_pattern(0.45);
    const std::string doc = render(table, OutputFormat::json);
    const nlohmann::json parsed = nlohmann::json::parse(doc);

    CHECK(parsed["spec"]["m"] == 2.0);
    CHECK(parsed["gauge"]["h_cm"] == 0.45);
    CHECK(parsed["rows"].size() == table.rows.size());
    CHECK(parsed["rows"][0]["stitches"] == 6);
    CHECK(parsed["total"] == table.total);

    CHECK(render(table, OutputFormat::json) == doc);  // byte-stable
}

TEST_CASE("schedule CSV header and rows") {
    const reference::AppendixModel model = reference::make_appendix_model();
    const std::string csv = render(model.schedule, OutputFormat::csv);
    CHECK(csv.rfind("round,n_inner,move_in,inc_inner,n_outer,inc_outer\n", 0) == 0);

    size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == model.schedule.rows.size() + 1);

    const nlohmann::json parsed =
        nlohmann::json::parse(render(model.schedule, OutputFormat::json));
    CHECK(parsed["quarter_start"] == model.schedule.quarter_start);
    CHECK(parsed["rows"].size() == model.schedule.rows.size());
}
