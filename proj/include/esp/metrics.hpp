#pragma once

#include <cstdint>
#include <span>

#include "esp/errors.hpp"

namespace esp {

// Standardized-accuracy configuration. The denominator scores random guesses
// drawn (with replacement) from the supplied effort pool:
//   GuessVsPrediction scores each guess against the prediction under test;
//   GuessVsActual scores it against the recorded actual (the
//   Shepperd-MacDonnell convention).
struct SaConfig {
  enum class Baseline { GuessVsPrediction, GuessVsActual };

  int baseline_draws = 1000;
  std::uint64_t rng_seed = 0;
  Baseline baseline = Baseline::GuessVsPrediction;
};

// Standardized accuracy as an error percentage: 100 * sum(|actual - pred|)
// over the Monte Carlo random-guess baseline summed across projects. All
// projects share one guess panel, so the result is independent of project
// order. 0 means the predictions match the actuals exactly; values can
// exceed 100 when predictions do worse than guessing.
//
// Throws LengthMismatch, EmptyInput, OutOfRange (non-positive draw count) and
// ZeroDenominator (every guess coincides with every reference value).
double sa_error(std::span<const double> actuals,
                std::span<const double> predictions,
                std::span<const double> all_efforts, const SaConfig& config = {});

// Percentile by linear interpolation between closest ranks: the value at
// fractional index (n - 1) * pct / 100 of the sorted list.
double percentile(std::span<const double> values, double pct);

double median(std::span<const double> values);  // percentile 50

// Interquartile range: percentile 75 minus percentile 25 (never negative).
double iqr(std::span<const double> values);

}  // namespace esp
