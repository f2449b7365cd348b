#include "esp/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "esp/rng.hpp"

namespace esp {

CalibrationParams calibrate(const Dataset& dataset, const TuningTable& table) {
  std::vector<double> xs;  // ln(kloc)
  std::vector<double> zs;  // ln(actual) with multiplier and exponent terms removed
  std::set<double> distinct_kloc;
  for (const auto& p : dataset.projects) {
    if (!p.actual_effort) continue;
    const double x = std::log(p.kloc);
    const double z = std::log(*p.actual_effort) -
                     std::log(effort_multiplier_product(p, table)) -
                     scale_factor_sum(p, table) * x;
    xs.push_back(x);
    zs.push_back(z);
    distinct_kloc.insert(p.kloc);
  }
  if (xs.size() < 2) {
    throw Underdetermined("calibration needs at least 2 projects with actual "
                          "effort, got " +
                          std::to_string(xs.size()));
  }
  if (distinct_kloc.size() < 2) {
    throw Underdetermined("calibration needs at least 2 distinct kloc values");
  }

  const double n = static_cast<double>(xs.size());
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_z = std::accumulate(zs.begin(), zs.end(), 0.0) / n;
  double sxx = 0.0;
  double sxz = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxz += (xs[i] - mean_x) * (zs[i] - mean_z);
  }
  const double b = sxz / sxx;
  const double ln_a = mean_z - b * mean_x;
  return CalibrationParams{std::exp(ln_a), b};
}

CalibrationStudy calibration_study(const Dataset& dataset, int repeats,
                                   double holdout, std::uint64_t seed,
                                   const TuningTable& table) {
  if (repeats < 1) {
    throw OutOfRange("repeats must be >= 1, got " + std::to_string(repeats));
  }
  if (!(holdout > 0.0) || holdout > 1.0) {
    throw OutOfRange("holdout fraction must lie in (0, 1]");
  }
  const std::size_t n = dataset.projects.size();
  const auto subset_size = static_cast<std::size_t>(
      std::floor(holdout * static_cast<double>(n) + 1e-9));
  if (subset_size < 2) {
    throw Underdetermined("holdout keeps fewer than 2 projects");
  }

  CalibrationStudy study;
  study.holdout_fraction = holdout;
  study.repeats = repeats;
  study.rng_seed = seed;
  study.samples.reserve(static_cast<std::size_t>(repeats));

  std::vector<std::size_t> order(n);
  for (int rep = 0; rep < repeats; ++rep) {
    std::iota(order.begin(), order.end(), 0);
    rng::Stream stream(rng::derive(seed, static_cast<std::uint64_t>(rep)));
    for (std::size_t i = 0; i < subset_size; ++i) {
      std::swap(order[i], order[i + stream.next_below(n - i)]);
    }
    // The draw is a set, not a sequence: restore dataset order so the fit is
    // independent of the shuffle's internal arrangement (and a full holdout
    // reproduces the plain fit bit for bit).
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(subset_size));
    Dataset subset;
    subset.name = dataset.name;
    subset.projects.reserve(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) {
      subset.projects.push_back(dataset.projects[order[i]]);
    }
    try {
      study.samples.push_back(calibrate(subset, table));
    } catch (const Underdetermined& e) {
      throw Underdetermined("resample " + std::to_string(rep) + ": " + e.what());
    }
  }
  return study;
}

}  // namespace esp
