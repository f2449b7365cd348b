#include "esp/perturb.hpp"

#include <algorithm>
#include <cmath>

#include "esp/rng.hpp"

namespace esp {
namespace {

// Purpose tags keep the kloc-noise and guess-panel sub-streams disjoint.
enum StreamTag : std::uint64_t { kKlocNoise = 1, kGuessPanel = 2 };

}  // namespace

double perturb_kloc(double kloc, double noise, double r) {
  if (!(kloc > 0.0)) {
    throw InvalidKloc("perturb_kloc needs kloc > 0");
  }
  if (noise < 0.0 || noise > 1.0) {
    throw OutOfRange("noise level must lie in [0, 1]");
  }
  if (r < 0.0 || r > 1.0) {
    throw OutOfRange("unit draw must lie in [0, 1]");
  }
  const double scaled = kloc * ((1.0 - noise) + 2.0 * noise * r);
  return std::max(scaled, kMinKloc);
}

Treatment make_treatment(double noise_level) {
  if (noise_level < 0.0 || noise_level > 1.0) {
    throw OutOfRange("noise level must lie in [0, 1]");
  }
  if (noise_level == 0.0) {
    return Treatment{"COCOMO2", 0.0};
  }
  const auto percent = static_cast<int>(std::llround(100.0 * noise_level));
  return Treatment{std::to_string(percent) + "%:COCOMO2", noise_level};
}

std::vector<SaSampleSet> run_study(const Dataset& dataset, const NoiseSpec& spec,
                                   const CalibrationParams& params,
                                   const TuningTable& table,
                                   const StudyOptions& options) {
  if (spec.repeats < 1) {
    throw OutOfRange("repeats must be >= 1, got " + std::to_string(spec.repeats));
  }

  std::vector<Treatment> treatments;
  treatments.push_back(make_treatment(0.0));
  for (const double level : spec.levels) {
    treatments.push_back(make_treatment(level));
  }

  std::vector<double> actuals;
  actuals.reserve(dataset.projects.size());
  for (const auto& p : dataset.projects) {
    if (!p.actual_effort) {
      throw MissingActualEffort("project '" + p.id +
                                "' has no recorded actual effort");
    }
    actuals.push_back(*p.actual_effort);
  }

  std::vector<SaSampleSet> results;
  results.reserve(treatments.size());
  std::vector<double> predictions(dataset.projects.size());
  for (std::size_t t = 0; t < treatments.size(); ++t) {
    SaSampleSet set;
    set.treatment = treatments[t];
    set.samples.reserve(static_cast<std::size_t>(spec.repeats));
    for (int rep = 0; rep < spec.repeats; ++rep) {
      for (std::size_t i = 0; i < dataset.projects.size(); ++i) {
        rng::Stream draw(rng::derive(spec.master_seed, kKlocNoise, t,
                                     static_cast<std::uint64_t>(rep), i));
        Project perturbed = dataset.projects[i];
        perturbed.kloc = perturb_kloc(perturbed.kloc, set.treatment.noise_level,
                                      draw.next_unit());
        predictions[i] = estimate_effort(perturbed, params, table);
      }
      SaConfig sa_config;
      sa_config.baseline_draws = options.baseline_draws;
      sa_config.baseline = options.baseline;
      sa_config.rng_seed = rng::derive(spec.master_seed, kGuessPanel, t,
                                       static_cast<std::uint64_t>(rep));
      set.samples.push_back(sa_error(actuals, predictions, actuals, sa_config));
    }
    results.push_back(std::move(set));
  }
  return results;
}

}  // namespace esp
