#pragma once

#include <cstdint>
#include <vector>

#include "esp/dataset.hpp"
#include "esp/model.hpp"

namespace esp {

// Least-squares fit of (a, b) in log space. With x = ln(kloc) and
// z = ln(actual) - ln(prod(EM)) - 0.01 * sum(SF) * ln(kloc), the effort
// equation is exactly z = ln(a) + b * x, so ordinary least squares on (x, z)
// recovers both parameters; noiseless data reproduces them to rounding error.
// Throws Underdetermined without two projects of distinct kloc carrying
// actual efforts, and MissingActualEffort never (projects without actuals are
// simply excluded from the fit — the two-project minimum applies after the
// exclusion).
CalibrationParams calibrate(const Dataset& dataset,
                            const TuningTable& table = TuningTable::defaults());

// Repeated calibration on random holdout subsets: each repeat draws
// floor(holdout * n) projects without replacement and fits (a, b) to them.
struct CalibrationStudy {
  std::vector<CalibrationParams> samples;  // one per repeat
  double holdout_fraction = 0.0;
  int repeats = 0;
  std::uint64_t rng_seed = 0;
};

// Throws OutOfRange for repeats < 1 or holdout outside (0, 1], and
// Underdetermined (tagged with the resample index) when a subset cannot be
// fitted.
CalibrationStudy calibration_study(const Dataset& dataset, int repeats = 30,
                                   double holdout = 0.9, std::uint64_t seed = 0,
                                   const TuningTable& table = TuningTable::defaults());

}  // namespace esp
