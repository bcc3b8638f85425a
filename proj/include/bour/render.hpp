#pragma once

#include <string>

#include "bour/pattern.hpp"

namespace bour {

enum class OutputFormat { text, csv, json };

// Throws std::invalid_argument on anything but "text", "csv" or "json".
OutputFormat parse_format(const std::string& name);

// Deterministic renderings: the same table always yields identical bytes.
// CSV uses the header `round,stitches,delta`, LF line endings.
std::string render(const PatternTable& table, OutputFormat format);

// Schedule CSV header: `round,n_inner,move_in,inc_inner,n_outer,inc_outer`.
std::string render(const IntersectionSchedule& schedule, OutputFormat format);

}  // namespace bour
