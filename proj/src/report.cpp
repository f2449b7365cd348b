#include "esp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "esp/metrics.hpp"
#include "esp/rng.hpp"

namespace esp {
namespace {

// Keeps the median ranking and the dispersion ranking on unrelated streams.
enum RankingTag : std::uint64_t { kMedianRanking = 1, kDispersionRanking = 2 };

std::vector<double> absolute_deviations(const std::vector<double>& samples) {
  const double center = median(samples);
  std::vector<double> deviations;
  deviations.reserve(samples.size());
  for (const double s : samples) deviations.push_back(std::abs(s - center));
  return deviations;
}

}  // namespace

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

ReportTable build_study_table(const std::vector<SaSampleSet>& sets,
                              const SkConfig& config, std::string title) {
  if (sets.empty()) {
    throw EmptyInput("study table needs at least one sample set");
  }
  std::vector<GroupSamples> med_groups;
  std::vector<GroupSamples> iqr_groups;
  med_groups.reserve(sets.size());
  iqr_groups.reserve(sets.size());
  for (const auto& set : sets) {
    med_groups.push_back({set.treatment.label, set.samples});
    iqr_groups.push_back({set.treatment.label, absolute_deviations(set.samples)});
  }

  SkConfig med_config = config;
  med_config.rng_seed = rng::derive(config.rng_seed, kMedianRanking);
  SkConfig iqr_config = config;
  iqr_config.rng_seed = rng::derive(config.rng_seed, kDispersionRanking);

  std::map<std::string, int> med_rank;
  for (const auto& ranked : scott_knott(std::move(med_groups), med_config)) {
    med_rank[ranked.label] = ranked.rank;
  }
  std::map<std::string, int> iqr_rank;
  for (const auto& ranked : scott_knott(std::move(iqr_groups), iqr_config)) {
    iqr_rank[ranked.label] = ranked.rank;
  }

  ReportTable table;
  table.title = std::move(title);
  table.rows.reserve(sets.size());
  for (const auto& set : sets) {
    ReportRow row;
    row.name = set.treatment.label;
    row.noise_level = set.treatment.noise_level;
    row.med_rank = med_rank.at(row.name);
    row.med = median(set.samples);
    row.iqr_rank = iqr_rank.at(row.name);
    row.iqr = iqr(set.samples);
    table.rows.push_back(std::move(row));
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const ReportRow& a, const ReportRow& b) {
              if (a.med_rank != b.med_rank) return a.med_rank < b.med_rank;
              return a.noise_level < b.noise_level;
            });
  return table;
}

void print_aligned(const std::vector<std::vector<std::string>>& cells,
                   std::ostream& out, bool markdown) {
  if (cells.empty()) return;
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  const auto emit_row = [&](const std::vector<std::string>& row) {
    if (markdown) out << "| ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c] << std::string(widths[c] - row[c].size(), ' ');
      if (c + 1 < row.size()) out << (markdown ? " | " : "  ");
    }
    if (markdown) out << " |";
    out << '\n';
  };
  emit_row(cells.front());
  if (markdown) {
    out << '|';
    for (std::size_t c = 0; c < widths.size(); ++c) {
      out << std::string(widths[c] + 2, '-') << '|';
    }
    out << '\n';
  }
  for (std::size_t r = 1; r < cells.size(); ++r) emit_row(cells[r]);
}

void print_report_table(const ReportTable& table, std::ostream& out,
                        bool markdown) {
  if (!table.title.empty()) out << table.title << '\n';
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"Name", "Med Rank", "Med", "IQR Rank", "IQR"});
  for (const auto& row : table.rows) {
    cells.push_back({row.name, std::to_string(row.med_rank),
                     format_number(row.med), std::to_string(row.iqr_rank),
                     format_number(row.iqr)});
  }
  print_aligned(cells, out, markdown);
}

void write_samples_csv(const std::vector<SaSampleSet>& sets, std::ostream& out) {
  out << "treatment,repeat,sa\n";
  for (const auto& set : sets) {
    for (std::size_t i = 0; i < set.samples.size(); ++i) {
      char buffer[40];
      std::snprintf(buffer, sizeof(buffer), "%.17g", set.samples[i]);
      out << set.treatment.label << ',' << i << ',' << buffer << '\n';
    }
  }
}

}  // namespace esp
