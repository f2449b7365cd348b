#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "esp/model.hpp"

namespace esp {

enum class DatasetFormat { Cocomo2, Cocomo81 };

std::optional<DatasetFormat> dataset_format_from_name(std::string_view name);
std::string_view dataset_format_name(DatasetFormat format);

struct Dataset {
  std::string name;
  std::string source_path;
  std::vector<Project> projects;
};

// CSV contract (both formats): lowercase attribute headers, a required kloc
// column, optional id and effort columns, '#' comments, ratings given either
// as 1..6 or as vl/l/n/h/vh/xh (case-insensitive). Unknown columns and
// duplicate project ids are rejected.
Dataset load_dataset(const std::string& path, DatasetFormat format);
Dataset parse_dataset(std::istream& in, DatasetFormat format,
                      std::string name = "", std::string source_path = "");

// Writes the 22-attribute layout with symbolic ratings; parsing the result
// back yields projects equal to the originals.
void write_dataset_csv(const Dataset& dataset, std::ostream& out);

// One record in the legacy 15-attribute layout that predates the 22-attribute
// model (rely, data, cplx, time, stor, virt, turn, acap, aexp, pcap, vexp,
// lexp, modp, tool, sced).
struct LegacyRecord {
  std::string id;
  std::map<std::string, Rating, std::less<>> ratings;
  double kloc = 0.0;
  std::optional<double> effort;
};

std::span<const std::string_view> legacy_attr_names();

// Maps a legacy record onto the 22-attribute layout:
//   - rely, data, cplx, time, stor, acap, aexp, pcap, sced copy unchanged;
//   - virt -> pvol, vexp -> plex, lexp -> ltex;
//   - modp and tool merge into tool as their mean rating (halves round away
//     from nominal-ward truncation, i.e. 2.5 -> 3);
//   - turn is dropped;
//   - prec, flex, resl, team, pmat, docu, ruse, pcon, site default to Nominal.
Project convert_cocomo81(const LegacyRecord& record);

// Size-estimate error table: percent deviation of a project's size estimate
// from its final delivered size, recorded at up to two estimation stages.
enum class SizeStage { PreAnalysis, PreCoding };

std::optional<SizeStage> size_stage_from_name(std::string_view name);
std::string_view size_stage_name(SizeStage stage);

struct SizeErrorRecord {
  std::string project_id;
  std::optional<double> pre_analysis_error;  // percent
  std::optional<double> pre_coding_error;    // percent
};

struct SizeErrorSummary {
  int n = 0;            // records considered
  int within_band = 0;  // records NOT known to exceed +/-100%
  double max_abs_error = 0.0;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

std::vector<SizeErrorRecord> load_size_errors(const std::string& path);
std::vector<SizeErrorRecord> parse_size_errors(std::istream& in);

// Order statistics cover the values present at the stage; records with no
// value at the stage still count toward n and cannot exceed the band, so
// within_band + (count of |error| > 100) == n always holds.
SizeErrorSummary size_error_summary(std::span<const SizeErrorRecord> records,
                                    SizeStage stage);

}  // namespace esp
