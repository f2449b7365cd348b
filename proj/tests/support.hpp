#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "esp/model.hpp"
#include "esp/rng.hpp"

// Shared fixtures for the unit and acceptance suites. The coefficient table
// below is a reference transcription kept deliberately separate from the
// library's own copy so the two can be cross-checked cell for cell.
namespace testsupport {

inline constexpr double kNoCell = -1.0;  // marks an undefined cell

struct ReferenceRow {
  const char* name;
  std::array<double, 6> cells;  // very low .. extra high
};

inline constexpr std::array<ReferenceRow, 22> kReferenceTable = {{
    {"flex", {5.07, 4.05, 3.04, 2.03, 1.01, kNoCell}},
    {"pmat", {7.80, 6.24, 4.68, 3.12, 1.56, kNoCell}},
    {"prec", {6.20, 4.96, 3.72, 2.48, 1.24, kNoCell}},
    {"resl", {7.07, 5.65, 4.24, 2.83, 1.41, kNoCell}},
    {"team", {5.48, 4.38, 3.29, 2.19, 1.01, kNoCell}},
    {"acap", {1.42, 1.19, 1.00, 0.85, 0.71, kNoCell}},
    {"aexp", {1.22, 1.10, 1.00, 0.88, 0.81, kNoCell}},
    {"cplx", {0.73, 0.87, 1.00, 1.17, 1.34, 1.74}},
    {"data", {kNoCell, 0.90, 1.00, 1.14, 1.28, kNoCell}},
    {"docu", {0.81, 0.91, 1.00, 1.11, 1.23, kNoCell}},
    {"ltex", {1.20, 1.09, 1.00, 0.91, 0.84, kNoCell}},
    {"pcap", {1.34, 1.15, 1.00, 0.88, 0.76, kNoCell}},
    {"pcon", {1.29, 1.12, 1.00, 0.90, 0.81, kNoCell}},
    {"plex", {1.19, 1.09, 1.00, 0.91, 0.85, kNoCell}},
    {"pvol", {kNoCell, 0.87, 1.00, 1.15, 1.30, kNoCell}},
    {"rely", {0.82, 0.92, 1.00, 1.10, 1.26, kNoCell}},
    {"ruse", {kNoCell, 0.95, 1.00, 1.07, 1.15, 1.24}},
    {"sced", {1.43, 1.14, 1.00, 1.00, 1.00, kNoCell}},
    {"site", {1.22, 1.09, 1.00, 0.93, 0.86, 0.80}},
    {"stor", {kNoCell, kNoCell, 1.00, 1.05, 1.17, 1.46}},
    {"time", {kNoCell, kNoCell, 1.00, 1.11, 1.29, 1.63}},
    {"tool", {1.17, 1.09, 1.00, 0.90, 0.78, kNoCell}},
}};

inline const ReferenceRow& reference_row(esp::Attr attr) {
  for (const auto& row : kReferenceTable) {
    if (esp::attr_name(attr) == row.name) return row;
  }
  throw std::logic_error("no reference row");
}

inline std::optional<double> reference_cell(esp::Attr attr, esp::Rating r) {
  const double v = reference_row(attr).cells[static_cast<int>(r) - 1];
  if (v == kNoCell) return std::nullopt;
  return v;
}

// Random rating limited to the attribute's defined cells.
inline esp::Rating random_defined_rating(esp::Attr attr,
                                         esp::rng::Stream& stream) {
  std::vector<esp::Rating> defined;
  for (int r = 1; r <= esp::kRatingCount; ++r) {
    if (reference_cell(attr, static_cast<esp::Rating>(r))) {
      defined.push_back(static_cast<esp::Rating>(r));
    }
  }
  return defined[stream.next_below(defined.size())];
}

inline esp::Project random_project(esp::rng::Stream& stream,
                                   double kloc_lo = 1.0,
                                   double kloc_hi = 2000.0) {
  esp::Project p;
  for (const esp::Attr attr : esp::all_attrs()) {
    p.set_rating(attr, random_defined_rating(attr, stream));
  }
  const double log_lo = std::log(kloc_lo);
  const double log_hi = std::log(kloc_hi);
  p.kloc = std::exp(log_lo + stream.next_unit() * (log_hi - log_lo));
  return p;
}

inline std::string data_path(const std::string& file) {
  return std::string(ESP_DATA_DIR) + "/" + file;
}

}  // namespace testsupport
