#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "esp/errors.hpp"

namespace esp {

// Effect size: P(x > y) + 0.5 * P(x == y) for x drawn from xs and y from ys.
// 0.5 means no effect; >= 0.6 is conventionally a non-small effect.
// Throws EmptyInput if either sample is empty.
double a12(std::span<const double> xs, std::span<const double> ys);

struct SkConfig {
  int bootstrap_resamples = 1000;
  double confidence = 0.99;     // reject sameness when p < 1 - confidence
  double a12_threshold = 0.6;   // minimum effect size to honor a rejection
  std::uint64_t rng_seed = 0;
};

// Two-sided bootstrap hypothesis test on the difference of means. Both
// samples are recentered onto the pooled mean, resampled with replacement
// bootstrap_resamples times, and the p-value is the fraction of resampled
// mean differences at least as large as the observed one. Per-resample draw
// streams derive from (rng_seed, resample index).
// Throws EmptyInput, OutOfRange (bad resample count or confidence).
bool bootstrap_differ(std::span<const double> xs, std::span<const double> ys,
                      const SkConfig& config = {});

struct GroupSamples {
  std::string label;
  std::vector<double> samples;
};

struct RankedGroup {
  std::string label;
  int rank = 0;  // 1 = lowest medians; equal rank = statistically indistinct
  std::vector<double> samples;
  double median = 0.0;
  double iqr = 0.0;
};

// Objective for splitting a median-sorted window of groups before position
// `split`: the count-weighted squared deviation of each side's pooled mean
// from the whole window's pooled mean. Throws OutOfRange unless
// 0 < split < groups.size().
double split_score(std::span<const GroupSamples> groups, std::size_t split);

// The split position maximizing split_score (smallest index wins ties).
// Throws EmptyInput if fewer than two groups.
std::size_t best_split(std::span<const GroupSamples> groups);

// Scott-Knott clustering: sorts groups by median (ties broken by label),
// recursively applies the best split, and keeps a split only when the two
// sides differ by both the bootstrap test and the a12 effect-size threshold.
// Ranks are contiguous from 1 upward in median order; groups sharing a rank
// were never successfully split apart. Deterministic for a given rng_seed
// regardless of input order.
std::vector<RankedGroup> scott_knott(std::vector<GroupSamples> groups,
                                     const SkConfig& config = {});

}  // namespace esp
