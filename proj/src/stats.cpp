#include "esp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "esp/metrics.hpp"
#include "esp/rng.hpp"

namespace esp {
namespace {

double mean(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double resampled_mean(std::span<const double> values, rng::Stream& stream) {
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum += values[stream.next_below(values.size())];
  }
  return sum / static_cast<double>(values.size());
}

struct PooledStats {
  double sum = 0.0;
  std::size_t count = 0;

  void absorb(const GroupSamples& group) {
    sum += std::accumulate(group.samples.begin(), group.samples.end(), 0.0);
    count += group.samples.size();
  }
  double mean() const { return sum / static_cast<double>(count); }
};

std::vector<double> pooled_samples(std::span<const GroupSamples> groups) {
  std::vector<double> pooled;
  for (const auto& group : groups) {
    pooled.insert(pooled.end(), group.samples.begin(), group.samples.end());
  }
  return pooled;
}

}  // namespace

double a12(std::span<const double> xs, std::span<const double> ys) {
  if (xs.empty() || ys.empty()) {
    throw EmptyInput("a12 needs two non-empty samples");
  }
  // Count in half-units so ties stay exact.
  long long half_units = 0;
  for (const double x : xs) {
    for (const double y : ys) {
      if (x > y) {
        half_units += 2;
      } else if (x == y) {
        half_units += 1;
      }
    }
  }
  return static_cast<double>(half_units) /
         (2.0 * static_cast<double>(xs.size()) * static_cast<double>(ys.size()));
}

bool bootstrap_differ(std::span<const double> xs, std::span<const double> ys,
                      const SkConfig& config) {
  if (xs.empty() || ys.empty()) {
    throw EmptyInput("bootstrap test needs two non-empty samples");
  }
  if (config.bootstrap_resamples < 1) {
    throw OutOfRange("bootstrap resample count must be >= 1");
  }
  if (!(config.confidence > 0.0) || !(config.confidence < 1.0)) {
    throw OutOfRange("confidence must lie in (0, 1)");
  }

  const double mean_x = mean(xs);
  const double mean_y = mean(ys);
  const double observed = std::abs(mean_x - mean_y);

  // Shift both samples onto the pooled mean so resampling happens under the
  // no-difference hypothesis.
  const double pooled =
      (mean_x * static_cast<double>(xs.size()) +
       mean_y * static_cast<double>(ys.size())) /
      static_cast<double>(xs.size() + ys.size());
  std::vector<double> shifted_x(xs.begin(), xs.end());
  std::vector<double> shifted_y(ys.begin(), ys.end());
  for (double& v : shifted_x) v += pooled - mean_x;
  for (double& v : shifted_y) v += pooled - mean_y;

  int at_least_as_large = 0;
  for (int b = 0; b < config.bootstrap_resamples; ++b) {
    rng::Stream stream(rng::derive(config.rng_seed, static_cast<std::uint64_t>(b)));
    const double diff =
        std::abs(resampled_mean(shifted_x, stream) - resampled_mean(shifted_y, stream));
    if (diff >= observed) ++at_least_as_large;
  }
  const double p_value = static_cast<double>(at_least_as_large) /
                         static_cast<double>(config.bootstrap_resamples);
  return p_value < 1.0 - config.confidence;
}

double split_score(std::span<const GroupSamples> groups, std::size_t split) {
  if (split == 0 || split >= groups.size()) {
    throw OutOfRange("split position must lie strictly inside the group list");
  }
  PooledStats left, right;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    (i < split ? left : right).absorb(groups[i]);
  }
  const double whole_mean =
      (left.sum + right.sum) / static_cast<double>(left.count + right.count);
  const double total = static_cast<double>(left.count + right.count);
  const double dl = left.mean() - whole_mean;
  const double dr = right.mean() - whole_mean;
  return (static_cast<double>(left.count) / total) * dl * dl +
         (static_cast<double>(right.count) / total) * dr * dr;
}

std::size_t best_split(std::span<const GroupSamples> groups) {
  if (groups.size() < 2) {
    throw EmptyInput("splitting needs at least two groups");
  }
  std::size_t best = 1;
  double best_score = split_score(groups, 1);
  for (std::size_t split = 2; split < groups.size(); ++split) {
    const double score = split_score(groups, split);
    if (score > best_score) {
      best_score = score;
      best = split;
    }
  }
  return best;
}

std::vector<RankedGroup> scott_knott(std::vector<GroupSamples> groups,
                                     const SkConfig& config) {
  if (groups.empty()) {
    throw EmptyInput("ranking needs at least one group");
  }
  for (const auto& group : groups) {
    if (group.samples.empty()) {
      throw EmptyInput("group '" + group.label + "' has no samples");
    }
  }

  std::vector<double> medians(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    medians[i] = median(groups[i].samples);
  }
  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (medians[a] != medians[b]) return medians[a] < medians[b];
    return groups[a].label < groups[b].label;
  });

  std::vector<GroupSamples> sorted;
  sorted.reserve(groups.size());
  for (const std::size_t i : order) sorted.push_back(std::move(groups[i]));

  // Window seeds derive from the (lo, hi) position in the sorted order, so
  // the decision sequence never depends on the caller's group order.
  std::vector<int> rank_of(sorted.size(), 0);
  int next_rank = 0;
  const auto assign = [&](std::size_t lo, std::size_t hi) {
    ++next_rank;
    for (std::size_t i = lo; i < hi; ++i) rank_of[i] = next_rank;
  };
  const std::function<void(std::size_t, std::size_t)> recurse =
      [&](std::size_t lo, std::size_t hi) {
        if (hi - lo <= 1) {
          assign(lo, hi);
          return;
        }
        const std::span<const GroupSamples> window(sorted.data() + lo, hi - lo);
        const std::size_t split = lo + best_split(window);
        const std::vector<double> left =
            pooled_samples(window.first(split - lo));
        const std::vector<double> right = pooled_samples(window.subspan(split - lo));
        SkConfig window_config = config;
        window_config.rng_seed = rng::derive(config.rng_seed, lo, hi);
        const bool differ = bootstrap_differ(left, right, window_config) &&
                            a12(right, left) >= config.a12_threshold;
        if (differ) {
          recurse(lo, split);
          recurse(split, hi);
        } else {
          assign(lo, hi);
        }
      };
  recurse(0, sorted.size());

  std::vector<RankedGroup> ranked;
  ranked.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    RankedGroup out;
    out.label = std::move(sorted[i].label);
    out.rank = rank_of[i];
    out.median = median(sorted[i].samples);
    out.iqr = iqr(sorted[i].samples);
    out.samples = std::move(sorted[i].samples);
    ranked.push_back(std::move(out));
  }
  return ranked;
}

}  // namespace esp
