#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "esp/rng.hpp"
#include "esp/stats.hpp"

using namespace esp;

namespace {

// Midrank reformulation: with R1 the rank sum of the first sample inside the
// pooled midranked ordering, the effect size is (R1 - m(m+1)/2) / (mn).
// Midranks are tracked in half-units so every intermediate stays an integer;
// the single final division must then agree bitwise with the pairwise
// counting definition.
double rank_based_a12(const std::vector<double>& xs, const std::vector<double>& ys) {
  struct Tagged {
    double value;
    bool from_xs;
  };
  std::vector<Tagged> pooled;
  pooled.reserve(xs.size() + ys.size());
  for (const double x : xs) pooled.push_back({x, true});
  for (const double y : ys) pooled.push_back({y, false});
  std::stable_sort(pooled.begin(), pooled.end(),
                   [](const Tagged& a, const Tagged& b) { return a.value < b.value; });
  long long rank_sum_half_units = 0;  // sum of 2 * midrank over xs members
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j].value == pooled[i].value) ++j;
    const long long doubled_midrank = static_cast<long long>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].from_xs) rank_sum_half_units += doubled_midrank;
    }
    i = j;
  }
  const long long m = static_cast<long long>(xs.size());
  const long long n = static_cast<long long>(ys.size());
  return static_cast<double>(rank_sum_half_units - m * (m + 1)) /
         (2.0 * static_cast<double>(m) * static_cast<double>(n));
}

std::vector<double> random_samples(rng::Stream& stream, std::size_t count,
                                   double offset = 0.0) {
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Quantized values so exact ties across samples actually happen.
    values.push_back(offset + static_cast<double>(stream.next_below(12)) * 0.5);
  }
  return values;
}

double enumerated_best_score(std::span<const GroupSamples> groups,
                             std::size_t* arg_best) {
  double best = -1.0;
  for (std::size_t split = 1; split < groups.size(); ++split) {
    const double score = split_score(groups, split);
    if (score > best) {
      best = score;
      *arg_best = split;
    }
  }
  return best;
}

std::map<std::string, int> rank_by_label(const std::vector<RankedGroup>& ranked) {
  std::map<std::string, int> ranks;
  for (const auto& group : ranked) ranks[group.label] = group.rank;
  return ranks;
}

}  // namespace

TEST_CASE("a12 reproduces hand-worked examples") {
  const std::vector<double> twos{2.0, 2.0};
  const std::vector<double> ones{1.0, 1.0};
  CHECK(a12(twos, ones) == 1.0);
  CHECK(a12(ones, twos) == 0.0);
  CHECK(a12(ones, ones) == 0.5);
  const std::vector<double> mixed{1.0, 2.0, 3.0};
  const std::vector<double> middle{2.0, 2.0, 2.0};
  // wins: 3 beats three 2s; ties: the 2; so (3 + 1.5) / 9 = 0.5.
  CHECK(a12(mixed, middle) == 0.5);
  CHECK(a12(std::vector<double>{1.0, 3.0}, std::vector<double>{2.0}) == 0.5);
  CHECK_THROWS_AS(a12({}, ones), EmptyInput);
  CHECK_THROWS_AS(a12(ones, {}), EmptyInput);
}

TEST_CASE("a12 is a complementary probability and stays in range") {
  rng::Stream stream(808);
  for (int trial = 0; trial < 300; ++trial) {
    const auto xs = random_samples(stream, 1 + stream.next_below(9));
    const auto ys = random_samples(stream, 1 + stream.next_below(9), 0.25);
    const double forward = a12(xs, ys);
    const double backward = a12(ys, xs);
    CHECK(forward >= 0.0);
    CHECK(forward <= 1.0);
    CHECK(forward + backward == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("a12 agrees bitwise with a rank-sum reformulation") {
  rng::Stream stream(1213);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto xs = random_samples(stream, 1 + stream.next_below(14));
    const auto ys = random_samples(stream, 1 + stream.next_below(14));
    CHECK(a12(xs, ys) == rank_based_a12(xs, ys));
  }
}

TEST_CASE("bootstrap keeps identical samples together and splits separated ones") {
  SkConfig config;
  config.rng_seed = 5;
  const std::vector<double> constant(30, 4.0);
  CHECK_FALSE(bootstrap_differ(constant, constant, config));

  rng::Stream stream(6);
  std::vector<double> low, high;
  for (int i = 0; i < 40; ++i) {
    low.push_back(stream.next_unit());
    high.push_back(10.0 + stream.next_unit());
  }
  CHECK(bootstrap_differ(low, high, config));
  CHECK(bootstrap_differ(high, low, config));
}

TEST_CASE("bootstrap false-rejection rate respects the confidence level") {
  // Same-distribution pairs should be rejected at most ~1% of the time at
  // confidence 0.99; allow a generous margin for Monte Carlo wobble.
  SkConfig config;
  config.bootstrap_resamples = 400;
  rng::Stream stream(31415);
  int rejections = 0;
  const int trials = 120;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> xs, ys;
    for (int i = 0; i < 25; ++i) {
      xs.push_back(stream.next_unit());
      ys.push_back(stream.next_unit());
    }
    config.rng_seed = rng::derive(777, trial);
    if (bootstrap_differ(xs, ys, config)) ++rejections;
  }
  CHECK(rejections <= trials / 20);
}

TEST_CASE("bootstrap validates its configuration") {
  SkConfig config;
  const std::vector<double> values{1.0, 2.0, 3.0};
  config.bootstrap_resamples = 0;
  CHECK_THROWS_AS(bootstrap_differ(values, values, config), OutOfRange);
  config.bootstrap_resamples = 100;
  config.confidence = 1.5;
  CHECK_THROWS_AS(bootstrap_differ(values, values, config), OutOfRange);
  config.confidence = 0.99;
  CHECK_THROWS_AS(bootstrap_differ({}, values, config), EmptyInput);
}

TEST_CASE("split objective matches a hand calculation") {
  // Window {1,1} | {10,10}: overall mean 5.5, each side's mean deviates by
  // 4.5, and each side holds half the samples, so the count-weighted score
  // is (2/4)*4.5^2 + (2/4)*4.5^2 = 20.25.
  const std::vector<GroupSamples> groups{
      {"lo", {1.0, 1.0}},
      {"hi", {10.0, 10.0}},
  };
  CHECK(split_score(groups, 1) == doctest::Approx(20.25).epsilon(1e-12));
  CHECK(best_split(groups) == 1);
  CHECK_THROWS_AS(split_score(groups, 0), OutOfRange);
  CHECK_THROWS_AS(split_score(groups, 2), OutOfRange);
  CHECK_THROWS_AS(best_split(std::vector<GroupSamples>{{"only", {1.0}}}),
                  EmptyInput);
}

TEST_CASE("asymmetric windows place the split at the enumerated optimum") {
  rng::Stream stream(2718);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<GroupSamples> groups;
    const std::size_t n_groups = 2 + stream.next_below(6);
    for (std::size_t g = 0; g < n_groups; ++g) {
      GroupSamples group;
      group.label = "g" + std::to_string(g);
      const std::size_t count = 1 + stream.next_below(7);
      for (std::size_t i = 0; i < count; ++i) {
        group.samples.push_back(static_cast<double>(stream.next_below(40)));
      }
      groups.push_back(std::move(group));
    }
    std::size_t expected = 0;
    const double best = enumerated_best_score(groups, &expected);
    const std::size_t got = best_split(groups);
    CHECK(got == expected);
    CHECK(split_score(groups, got) == best);
  }
}

TEST_CASE("clustering base cases") {
  SkConfig config;
  config.rng_seed = 17;

  auto single = scott_knott({{"alone", {3.0, 4.0, 5.0}}}, config);
  REQUIRE(single.size() == 1);
  CHECK(single[0].rank == 1);
  CHECK(single[0].median == 4.0);

  auto identical = scott_knott(
      {{"a", {2.0, 2.0, 2.0, 2.0}}, {"b", {2.0, 2.0, 2.0, 2.0}}}, config);
  REQUIRE(identical.size() == 2);
  CHECK(identical[0].rank == 1);
  CHECK(identical[1].rank == 1);

  std::vector<GroupSamples> separated{{"near", {}}, {"far", {}}};
  rng::Stream stream(99);
  for (int i = 0; i < 30; ++i) {
    separated[0].samples.push_back(stream.next_unit());
    separated[1].samples.push_back(50.0 + stream.next_unit());
  }
  auto split = scott_knott(separated, config);
  REQUIRE(split.size() == 2);
  CHECK(split[0].label == "near");  // lower median first
  CHECK(split[0].rank == 1);
  CHECK(split[1].label == "far");
  CHECK(split[1].rank == 2);

  CHECK_THROWS_AS(scott_knott({}, config), EmptyInput);
}

TEST_CASE("clustering groups six treatments into two families") {
  rng::Stream stream(424242);
  std::vector<GroupSamples> groups;
  for (int g = 0; g < 6; ++g) {
    GroupSamples group;
    group.label = "t" + std::to_string(g);
    const double center = g < 3 ? 0.0 : 30.0;
    for (int i = 0; i < 40; ++i) {
      group.samples.push_back(center + 2.0 * stream.next_unit());
    }
    groups.push_back(std::move(group));
  }
  SkConfig config;
  config.rng_seed = 7;
  const auto ranked = scott_knott(groups, config);
  REQUIRE(ranked.size() == 6);
  for (const auto& group : ranked) {
    const bool low_family = group.label == "t0" || group.label == "t1" ||
                            group.label == "t2";
    CHECK(group.rank == (low_family ? 1 : 2));
  }
}

TEST_CASE("ranks are contiguous and ordered with the medians") {
  rng::Stream stream(5150);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<GroupSamples> groups;
    const std::size_t n_groups = 2 + stream.next_below(5);
    for (std::size_t g = 0; g < n_groups; ++g) {
      GroupSamples group;
      group.label = "r" + std::to_string(g);
      const double center = static_cast<double>(stream.next_below(4)) * 5.0;
      for (int i = 0; i < 20; ++i) {
        group.samples.push_back(center + stream.next_unit());
      }
      groups.push_back(std::move(group));
    }
    SkConfig config;
    config.rng_seed = rng::derive(31, trial);
    const auto ranked = scott_knott(groups, config);
    REQUIRE(ranked.size() == n_groups);
    CHECK(ranked.front().rank == 1);
    for (std::size_t i = 1; i < ranked.size(); ++i) {
      CHECK(ranked[i].median >= ranked[i - 1].median);
      const int step = ranked[i].rank - ranked[i - 1].rank;
      CHECK((step == 0 || step == 1));
    }
  }
}

TEST_CASE("clustering outcome ignores input order") {
  rng::Stream stream(61803);
  std::vector<GroupSamples> groups;
  for (int g = 0; g < 5; ++g) {
    GroupSamples group;
    group.label = "p" + std::to_string(g);
    const double center = static_cast<double>(g) * 1.5;
    for (int i = 0; i < 25; ++i) {
      group.samples.push_back(center + stream.next_unit());
    }
    groups.push_back(std::move(group));
  }
  SkConfig config;
  config.rng_seed = 12;
  const auto baseline = rank_by_label(scott_knott(groups, config));

  std::vector<GroupSamples> shuffled{groups[3], groups[0], groups[4], groups[2],
                                     groups[1]};
  CHECK(rank_by_label(scott_knott(shuffled, config)) == baseline);

  std::vector<GroupSamples> reversed(groups.rbegin(), groups.rend());
  CHECK(rank_by_label(scott_knott(reversed, config)) == baseline);
}

TEST_CASE("a split needs both the bootstrap and the effect size to pass") {
  // Two barely shifted, heavily overlapping samples: the mean difference is
  // real enough for a huge bootstrap sample to flag, but the effect size
  // stays near 0.5, so the split must be vetoed and both groups share rank 1.
  rng::Stream stream(271828);
  std::vector<GroupSamples> groups{{"base", {}}, {"shift", {}}};
  for (int i = 0; i < 400; ++i) {
    const double u = stream.next_unit();
    groups[0].samples.push_back(u);
    groups[1].samples.push_back(u + 0.08);
  }
  SkConfig config;
  config.rng_seed = 5;
  config.bootstrap_resamples = 2000;
  const auto vetoed = scott_knott(groups, config);
  // Sanity: the bootstrap alone would reject sameness for these samples.
  CHECK(bootstrap_differ(groups[0].samples, groups[1].samples, config));
  CHECK(a12(groups[1].samples, groups[0].samples) < 0.6);
  CHECK(vetoed[0].rank == 1);
  CHECK(vetoed[1].rank == 1);

  // Raising the threshold to an unreachable level vetoes even a huge shift.
  std::vector<GroupSamples> wide{{"lo", {}}, {"hi", {}}};
  for (int i = 0; i < 50; ++i) {
    const double u = stream.next_unit();
    wide[0].samples.push_back(u);
    wide[1].samples.push_back(u + 100.0);
  }
  SkConfig strict = config;
  strict.a12_threshold = 1.01;
  const auto merged = scott_knott(wide, strict);
  CHECK(merged[0].rank == 1);
  CHECK(merged[1].rank == 1);
  const auto split = scott_knott(wide, config);
  CHECK(split[1].rank == 2);
}
