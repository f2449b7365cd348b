#include "esp/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "esp/csv.hpp"
#include "esp/metrics.hpp"

namespace esp {
namespace {

constexpr std::string_view kLegacyAttrNames[] = {
    "rely", "data", "cplx", "time", "stor", "virt", "turn", "acap",
    "aexp", "pcap", "vexp", "lexp", "modp", "tool", "sced"};

struct ColumnIndex {
  std::map<std::string, std::size_t> by_name;

  std::optional<std::size_t> find(std::string_view name) const {
    const auto it = by_name.find(std::string(name));
    if (it == by_name.end()) return std::nullopt;
    return it->second;
  }
};

ColumnIndex index_columns(const std::vector<std::string>& header,
                          const std::vector<std::string_view>& known) {
  ColumnIndex index;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = csv::lower(header[i]);
    if (name.empty()) throw ParseError("header has an empty column name");
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ParseError("unknown column '" + name + "'");
    }
    if (!index.by_name.emplace(name, i).second) {
      throw ParseError("duplicate column '" + name + "'");
    }
  }
  return index;
}

void require_columns(const ColumnIndex& index,
                     const std::vector<std::string_view>& required) {
  std::string missing;
  for (const auto name : required) {
    if (!index.find(name)) {
      if (!missing.empty()) missing += ", ";
      missing += name;
    }
  }
  if (!missing.empty()) {
    throw MissingColumn("missing required column(s): " + missing);
  }
}

Rating parse_rating_cell(const std::string& cell, int line, std::string_view column) {
  try {
    return rating_from_symbol(cell);
  } catch (const UnknownRatingSymbol&) {
    throw UnknownRatingSymbol("line " + std::to_string(line) + ", column " +
                              std::string(column) + ": unknown rating '" +
                              cell + "'");
  }
}

double parse_kloc_cell(const std::string& cell, int line) {
  const auto value = csv::parse_double(cell);
  if (!value) {
    throw ParseError("line " + std::to_string(line) + ": kloc value '" + cell +
                     "' is not a number");
  }
  if (!(*value > 0.0)) {
    throw InvalidKloc("line " + std::to_string(line) + ": kloc must be > 0, got " +
                      cell);
  }
  return *value;
}

std::optional<double> parse_effort_cell(const std::string& cell, int line) {
  if (csv::trim(cell).empty()) return std::nullopt;
  const auto value = csv::parse_double(cell);
  if (!value) {
    throw ParseError("line " + std::to_string(line) + ": effort value '" + cell +
                     "' is not a number");
  }
  if (!(*value > 0.0)) {
    throw ParseError("line " + std::to_string(line) +
                     ": effort must be > 0, got " + cell);
  }
  return value;
}

std::string default_id(std::size_t row_index) {
  return "p" + std::to_string(row_index + 1);
}

void check_unique_ids(const std::vector<Project>& projects) {
  std::set<std::string> seen;
  for (const auto& p : projects) {
    if (!seen.insert(p.id).second) {
      throw ParseError("duplicate project id '" + p.id + "'");
    }
  }
}

std::string format_full_precision(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::vector<Project> parse_cocomo2_rows(const csv::Table& table) {
  std::vector<std::string_view> known{"id", "kloc", "effort"};
  std::vector<std::string_view> required{"kloc"};
  for (const Attr attr : all_attrs()) {
    known.push_back(attr_name(attr));
    required.push_back(attr_name(attr));
  }
  const ColumnIndex index = index_columns(table.header, known);
  require_columns(index, required);

  std::vector<Project> projects;
  projects.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const int line = table.line_numbers[r];
    Project p;
    if (const auto id_col = index.find("id")) {
      p.id = row[*id_col];
    }
    if (p.id.empty()) p.id = default_id(r);
    for (const Attr attr : all_attrs()) {
      const auto col = index.find(attr_name(attr));
      p.set_rating(attr, parse_rating_cell(row[*col], line, attr_name(attr)));
    }
    p.kloc = parse_kloc_cell(row[*index.find("kloc")], line);
    if (const auto effort_col = index.find("effort")) {
      p.actual_effort = parse_effort_cell(row[*effort_col], line);
    }
    projects.push_back(std::move(p));
  }
  return projects;
}

std::vector<Project> parse_cocomo81_rows(const csv::Table& table) {
  std::vector<std::string_view> known{"id", "kloc", "effort"};
  std::vector<std::string_view> required{"kloc"};
  for (const auto name : kLegacyAttrNames) {
    known.push_back(name);
    required.push_back(name);
  }
  const ColumnIndex index = index_columns(table.header, known);
  require_columns(index, required);

  std::vector<Project> projects;
  projects.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const int line = table.line_numbers[r];
    LegacyRecord record;
    if (const auto id_col = index.find("id")) {
      record.id = row[*id_col];
    }
    if (record.id.empty()) record.id = default_id(r);
    for (const auto name : kLegacyAttrNames) {
      const auto col = index.find(name);
      record.ratings.emplace(std::string(name),
                             parse_rating_cell(row[*col], line, name));
    }
    record.kloc = parse_kloc_cell(row[*index.find("kloc")], line);
    if (const auto effort_col = index.find("effort")) {
      record.effort = parse_effort_cell(row[*effort_col], line);
    }
    projects.push_back(convert_cocomo81(record));
  }
  return projects;
}

}  // namespace

std::optional<DatasetFormat> dataset_format_from_name(std::string_view name) {
  const std::string lowered = csv::lower(name);
  if (lowered == "cocomo2") return DatasetFormat::Cocomo2;
  if (lowered == "cocomo81") return DatasetFormat::Cocomo81;
  return std::nullopt;
}

std::string_view dataset_format_name(DatasetFormat format) {
  return format == DatasetFormat::Cocomo2 ? "cocomo2" : "cocomo81";
}

Dataset load_dataset(const std::string& path, DatasetFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("no such file: " + path);
  }
  return parse_dataset(in, format, std::filesystem::path(path).stem().string(),
                       path);
}

Dataset parse_dataset(std::istream& in, DatasetFormat format, std::string name,
                      std::string source_path) {
  const csv::Table table = csv::read(in);
  Dataset dataset;
  dataset.name = std::move(name);
  dataset.source_path = std::move(source_path);
  dataset.projects = format == DatasetFormat::Cocomo2
                         ? parse_cocomo2_rows(table)
                         : parse_cocomo81_rows(table);
  if (dataset.projects.empty()) {
    throw EmptyDataset("dataset has no project rows");
  }
  check_unique_ids(dataset.projects);
  return dataset;
}

void write_dataset_csv(const Dataset& dataset, std::ostream& out) {
  out << "id";
  for (const Attr attr : all_attrs()) out << ',' << attr_name(attr);
  out << ",kloc,effort\n";
  for (const auto& p : dataset.projects) {
    out << p.id;
    for (const Attr attr : all_attrs()) out << ',' << rating_symbol(p.rating(attr));
    out << ',' << format_full_precision(p.kloc) << ',';
    if (p.actual_effort) out << format_full_precision(*p.actual_effort);
    out << '\n';
  }
}

std::span<const std::string_view> legacy_attr_names() {
  return kLegacyAttrNames;
}

Project convert_cocomo81(const LegacyRecord& record) {
  std::string missing;
  for (const auto name : kLegacyAttrNames) {
    if (record.ratings.find(name) == record.ratings.end()) {
      if (!missing.empty()) missing += ", ";
      missing += name;
    }
  }
  if (!missing.empty()) {
    throw MissingColumn("legacy record '" + record.id +
                        "' lacks attribute(s): " + missing);
  }
  const auto legacy = [&record](std::string_view name) {
    return record.ratings.find(name)->second;
  };

  Project p = Project::all_nominal(record.id, record.kloc, record.effort);
  p.set_rating(Attr::Rely, legacy("rely"));
  p.set_rating(Attr::Data, legacy("data"));
  p.set_rating(Attr::Cplx, legacy("cplx"));
  p.set_rating(Attr::Time, legacy("time"));
  p.set_rating(Attr::Stor, legacy("stor"));
  p.set_rating(Attr::Acap, legacy("acap"));
  p.set_rating(Attr::Aexp, legacy("aexp"));
  p.set_rating(Attr::Pcap, legacy("pcap"));
  p.set_rating(Attr::Sced, legacy("sced"));
  p.set_rating(Attr::Pvol, legacy("virt"));
  p.set_rating(Attr::Plex, legacy("vexp"));
  p.set_rating(Attr::Ltex, legacy("lexp"));
  // modp and tool describe overlapping practice/tooling maturity; merge them
  // into the single tool attribute as the rounded mean rating (2.5 -> 3).
  const int merged = static_cast<int>(
      std::llround((static_cast<int>(legacy("modp")) +
                    static_cast<int>(legacy("tool"))) /
                   2.0));
  p.set_rating(Attr::Tool, rating_from_int(merged));
  return p;
}

std::optional<SizeStage> size_stage_from_name(std::string_view name) {
  const std::string lowered = csv::lower(name);
  if (lowered == "pre_analysis") return SizeStage::PreAnalysis;
  if (lowered == "pre_coding") return SizeStage::PreCoding;
  return std::nullopt;
}

std::string_view size_stage_name(SizeStage stage) {
  return stage == SizeStage::PreAnalysis ? "pre_analysis" : "pre_coding";
}

std::vector<SizeErrorRecord> load_size_errors(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("no such file: " + path);
  }
  return parse_size_errors(in);
}

std::vector<SizeErrorRecord> parse_size_errors(std::istream& in) {
  const csv::Table table = csv::read(in);
  const ColumnIndex index =
      index_columns(table.header, {"project", "pre_analysis", "pre_coding"});
  require_columns(index, {"project", "pre_analysis", "pre_coding"});

  std::vector<SizeErrorRecord> records;
  records.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const int line = table.line_numbers[r];
    SizeErrorRecord record;
    record.project_id = row[*index.find("project")];
    if (record.project_id.empty()) {
      throw ParseError("line " + std::to_string(line) + ": empty project id");
    }
    const auto parse_stage = [&row, line](std::size_t col,
                                          std::string_view label) {
      const std::string& cell = row[col];
      if (cell.empty()) return std::optional<double>();
      const auto value = csv::parse_double(cell);
      if (!value) {
        throw ParseError("line " + std::to_string(line) + ", column " +
                         std::string(label) + ": '" + cell +
                         "' is not a number");
      }
      return std::optional<double>(*value);
    };
    record.pre_analysis_error =
        parse_stage(*index.find("pre_analysis"), "pre_analysis");
    record.pre_coding_error = parse_stage(*index.find("pre_coding"), "pre_coding");
    if (!record.pre_analysis_error && !record.pre_coding_error) {
      throw ParseError("line " + std::to_string(line) +
                       ": record has no error value at either stage");
    }
    records.push_back(std::move(record));
  }
  return records;
}

SizeErrorSummary size_error_summary(std::span<const SizeErrorRecord> records,
                                    SizeStage stage) {
  if (records.empty()) {
    throw EmptyInput("size-error summary of an empty record list");
  }
  std::vector<double> present;
  present.reserve(records.size());
  for (const auto& record : records) {
    const auto& value = stage == SizeStage::PreAnalysis
                            ? record.pre_analysis_error
                            : record.pre_coding_error;
    if (value) present.push_back(*value);
  }
  if (present.empty()) {
    throw EmptyInput("no error values recorded at stage " +
                     std::string(size_stage_name(stage)));
  }

  SizeErrorSummary summary;
  summary.n = static_cast<int>(records.size());
  int exceeders = 0;
  for (const double v : present) {
    if (std::abs(v) > 100.0) ++exceeders;
  }
  summary.within_band = summary.n - exceeders;
  summary.max_abs_error = 0.0;
  for (const double v : present) {
    summary.max_abs_error = std::max(summary.max_abs_error, std::abs(v));
  }
  summary.min = *std::min_element(present.begin(), present.end());
  summary.max = *std::max_element(present.begin(), present.end());
  summary.median = median(present);
  return summary;
}

}  // namespace esp
