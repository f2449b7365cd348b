// Generates a synthetic project dataset in the legacy 15-attribute CSV
// layout. Ratings are drawn from per-attribute plausible ranges, sizes are
// log-uniform, and actual efforts come from the default model with
// multiplicative log-normal noise, so the file exercises the conversion and
// estimation pipeline end to end. Deterministic for a given seed.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "esp/dataset.hpp"
#include "esp/model.hpp"
#include "esp/rng.hpp"

namespace {

struct AttrRange {
  const char* name;
  int lo;
  int hi;
};

// Ranges keep every converted rating on a defined tuning cell (e.g. the data
// and virt scales start at Low, time and stor at Nominal).
constexpr AttrRange kRanges[] = {
    {"rely", 1, 5}, {"data", 2, 5}, {"cplx", 1, 6}, {"time", 3, 6},
    {"stor", 3, 6}, {"virt", 2, 5}, {"turn", 1, 5}, {"acap", 1, 5},
    {"aexp", 1, 5}, {"pcap", 1, 5}, {"vexp", 1, 5}, {"lexp", 1, 5},
    {"modp", 1, 5}, {"tool", 1, 5}, {"sced", 1, 5},
};

// Mildly center-weighted rating draw.
int draw_rating(esp::rng::Stream& stream, int lo, int hi) {
  const int a = lo + static_cast<int>(stream.next_below(
                         static_cast<std::size_t>(hi - lo + 1)));
  const int b = lo + static_cast<int>(stream.next_below(
                         static_cast<std::size_t>(hi - lo + 1)));
  return (a + b + 1) / 2;
}

double draw_gaussian(esp::rng::Stream& stream) {
  // Box-Muller; discards the second variate.
  const double u1 = std::max(stream.next_unit(), 1e-12);
  const double u2 = stream.next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic legacy-layout dataset generator"};
  int projects = 63;
  std::uint64_t seed = 7;
  double noise = 0.5;
  std::string out_path;
  app.add_option("--projects", projects, "Number of rows")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Generator seed");
  app.add_option("--noise", noise, "Log-normal effort noise sigma");
  app.add_option("--out", out_path, "Output file (default: stdout)");
  CLI11_PARSE(app, argc, argv);

  std::ostringstream csv;
  csv << "# synthetic legacy-layout dataset: " << projects << " projects, seed "
      << seed << ", effort noise sigma " << noise << "\n";
  csv << "# generated by esp_synth\n";
  csv << "id";
  for (const auto& range : kRanges) csv << ',' << range.name;
  csv << ",kloc,effort\n";

  for (int i = 0; i < projects; ++i) {
    esp::rng::Stream stream(esp::rng::derive(seed, static_cast<std::uint64_t>(i)));
    esp::LegacyRecord record;
    record.id = "s" + std::to_string(i + 1);
    for (const auto& range : kRanges) {
      record.ratings.emplace(
          range.name,
          esp::rating_from_int(draw_rating(stream, range.lo, range.hi)));
    }
    const double log_kloc =
        std::log(2.0) + stream.next_unit() * (std::log(1000.0) - std::log(2.0));
    record.kloc = std::max(2.0, std::round(std::exp(log_kloc) * 10.0) / 10.0);

    const esp::Project converted = esp::convert_cocomo81(record);
    const double model_effort = esp::estimate_effort(
        converted, esp::CalibrationParams{}, esp::TuningTable::defaults());
    const double actual =
        std::max(0.5, model_effort * std::exp(noise * draw_gaussian(stream)));

    csv << record.id;
    for (const auto& range : kRanges) {
      csv << ',' << esp::rating_symbol(record.ratings.at(range.name));
    }
    char kloc_text[32];
    std::snprintf(kloc_text, sizeof(kloc_text), "%.1f", record.kloc);
    char effort_text[32];
    std::snprintf(effort_text, sizeof(effort_text), "%.2f", actual);
    csv << ',' << kloc_text << ',' << effort_text << '\n';
  }

  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << '\n';
      return 1;
    }
    file << csv.str();
  }
  return 0;
}
