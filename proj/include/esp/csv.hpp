#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "esp/errors.hpp"

namespace esp::csv {

// Minimal comma-separated table: '#' starts a comment line, blank lines are
// skipped, cells are trimmed, and quoting is not supported. Every data row
// must have exactly as many cells as the header.
struct Table {
  std::vector<std::string> header;             // as written (callers lowercase)
  std::vector<std::vector<std::string>> rows;  // trimmed cell text
  std::vector<int> line_numbers;               // 1-based source line per row
};

Table read(std::istream& in);  // throws ParseError

std::string trim(std::string_view s);
std::string lower(std::string_view s);

// strtod-free numeric parsing; returns nullopt unless the whole cell parses.
std::optional<double> parse_double(std::string_view cell);

}  // namespace esp::csv
