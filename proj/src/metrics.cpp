#include "esp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "esp/rng.hpp"

namespace esp {

double sa_error(std::span<const double> actuals,
                std::span<const double> predictions,
                std::span<const double> all_efforts, const SaConfig& config) {
  if (actuals.size() != predictions.size()) {
    throw LengthMismatch("actuals has " + std::to_string(actuals.size()) +
                         " entries, predictions has " +
                         std::to_string(predictions.size()));
  }
  if (actuals.empty()) {
    throw EmptyInput("standardized accuracy needs at least one project");
  }
  if (all_efforts.empty()) {
    throw EmptyInput("standardized accuracy needs a non-empty effort pool");
  }
  if (config.baseline_draws < 1) {
    throw OutOfRange("baseline draw count must be >= 1, got " +
                     std::to_string(config.baseline_draws));
  }

  double numerator = 0.0;
  for (std::size_t i = 0; i < actuals.size(); ++i) {
    numerator += std::abs(actuals[i] - predictions[i]);
  }

  // One guess panel shared by all projects keeps the aggregate independent of
  // project order while converging to the same expectation as per-project
  // draws.
  rng::Stream stream(config.rng_seed);
  std::vector<double> guesses(static_cast<std::size_t>(config.baseline_draws));
  for (double& g : guesses) {
    g = all_efforts[stream.next_below(all_efforts.size())];
  }

  double denominator = 0.0;
  for (std::size_t i = 0; i < actuals.size(); ++i) {
    const double reference = config.baseline == SaConfig::Baseline::GuessVsPrediction
                                 ? predictions[i]
                                 : actuals[i];
    double sum = 0.0;
    for (const double g : guesses) {
      sum += std::abs(g - reference);
    }
    denominator += sum / static_cast<double>(guesses.size());
  }
  if (denominator == 0.0) {
    throw ZeroDenominator(
        "random-guess baseline is zero: every draw equals every reference value");
  }
  return 100.0 * numerator / denominator;
}

double percentile(std::span<const double> values, double pct) {
  if (values.empty()) {
    throw EmptyInput("percentile of an empty list");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (pct <= 0.0) return sorted.front();
  if (pct >= 100.0) return sorted.back();
  const double h = static_cast<double>(sorted.size() - 1) * pct / 100.0;
  const auto lo = static_cast<std::size_t>(h);
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double median(std::span<const double> values) { return percentile(values, 50.0); }

double iqr(std::span<const double> values) {
  return percentile(values, 75.0) - percentile(values, 25.0);
}

}  // namespace esp
