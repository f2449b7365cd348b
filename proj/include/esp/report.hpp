#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "esp/perturb.hpp"
#include "esp/stats.hpp"

namespace esp {

// One study-summary row: the treatment's rank and median over its
// standardized-accuracy samples, plus a second ranking of the treatments'
// dispersions (per-repeat absolute deviation from the treatment median).
struct ReportRow {
  std::string name;
  double noise_level = 0.0;
  int med_rank = 0;
  double med = 0.0;
  int iqr_rank = 0;
  double iqr = 0.0;
};

struct ReportTable {
  std::string title;
  std::vector<ReportRow> rows;  // ascending med_rank, ties by noise level
};

ReportTable build_study_table(const std::vector<SaSampleSet>& sets,
                              const SkConfig& config = {},
                              std::string title = "");

// Shared number formatting so tables and CSV exports carry identical text.
std::string format_number(double value);

void print_report_table(const ReportTable& table, std::ostream& out,
                        bool markdown = false);

// Raw per-repeat samples: treatment,repeat,sa
void write_samples_csv(const std::vector<SaSampleSet>& sets, std::ostream& out);

// Generic aligned table printing for the other commands.
void print_aligned(const std::vector<std::vector<std::string>>& cells,
                   std::ostream& out, bool markdown = false);

}  // namespace esp
