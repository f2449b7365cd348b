#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "esp/dataset.hpp"
#include "esp/metrics.hpp"
#include "esp/model.hpp"

namespace esp {

// Smallest size a perturbed project can shrink to (thousands of lines).
inline constexpr double kMinKloc = 0.001;

// Multiplicative size noise: kloc * ((1 - noise) + 2 * noise * r) clamped to
// kMinKloc. r is a unit uniform draw; noise = 0 is the identity, noise = 1
// scales anywhere in [0, 2x]. The scaling factor has mean 1 for any noise.
double perturb_kloc(double kloc, double noise, double r);

// A noise level with its display label: "COCOMO2" for the unperturbed
// baseline, otherwise "<percent>%:COCOMO2" with percent = round(100 * noise).
struct Treatment {
  std::string label;
  double noise_level = 0.0;
};

Treatment make_treatment(double noise_level);  // throws OutOfRange

// Noise levels to probe, repeats per treatment, and the master seed all
// sample streams derive from.
struct NoiseSpec {
  std::vector<double> levels{0.2, 0.4, 0.6, 0.8, 1.0};
  int repeats = 100;
  std::uint64_t master_seed = 0;
};

struct SaSampleSet {
  Treatment treatment;
  std::vector<double> samples;  // one standardized-accuracy value per repeat
};

struct StudyOptions {
  int baseline_draws = 1000;
  SaConfig::Baseline baseline = SaConfig::Baseline::GuessVsPrediction;
};

// Monte Carlo sensitivity study. For every treatment (the unperturbed
// baseline plus one treatment per noise level) and every repeat, each
// project's kloc is independently perturbed, effort is re-estimated with
// unperturbed ratings, and one standardized-accuracy value is recorded
// against the dataset's actual efforts. Per-(treatment, repeat, project)
// randomness derives from the master seed alone, so results are reproducible
// and independent of evaluation order.
//
// Throws MissingActualEffort if any project lacks a recorded actual, and
// OutOfRange for repeats < 1 or a noise level outside [0, 1].
std::vector<SaSampleSet> run_study(const Dataset& dataset, const NoiseSpec& spec,
                                   const CalibrationParams& params,
                                   const TuningTable& table,
                                   const StudyOptions& options = {});

}  // namespace esp
