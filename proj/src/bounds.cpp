#include "esp/bounds.hpp"

#include <cmath>
#include <string>

namespace esp {
namespace {

constexpr std::array<Rating, 5> kUniformLevels = {
    Rating::VeryLow, Rating::Low, Rating::Nominal, Rating::High,
    Rating::VeryHigh};

// 0.01 * sum of scale-factor coefficients with every factor at one level.
double uniform_sf_sum(Rating level, const TuningTable& table) {
  double sum = 0.0;
  for (const Attr attr : scale_factors()) sum += table.coefficient(attr, level);
  return 0.01 * sum;
}

void check_grid(std::span<const double> grid) {
  if (grid.size() < 2) {
    throw InvalidGrid("kloc grid needs at least 2 points");
  }
  double previous = 0.0;
  for (const double k : grid) {
    if (!(k > 0.0)) {
      throw InvalidGrid("kloc grid values must be positive");
    }
    if (k <= previous) {
      throw InvalidGrid("kloc grid must be strictly increasing");
    }
    previous = k;
  }
}

}  // namespace

BoundsEnvelope derive_envelope(const TuningTable& table, Interval b_range) {
  BoundsEnvelope envelope;
  envelope.b_range = b_range;
  for (std::size_t i = 0; i < kUniformLevels.size(); ++i) {
    envelope.exponents[i].level = kUniformLevels[i];
    envelope.exponents[i].y = exponent_range(kUniformLevels[i], b_range, table);
  }
  envelope.em_min = 1.0;
  envelope.em_max = 1.0;
  for (const Attr attr : effort_multipliers()) {
    envelope.em_min *= table.min_coefficient(attr);
    envelope.em_max *= table.max_coefficient(attr);
  }
  return envelope;
}

Interval exponent_range(Rating level, Interval b_range, const TuningTable& table) {
  if (level == Rating::ExtraHigh) {
    throw OutOfRange("scale factors define no ExtraHigh level");
  }
  const double sum = uniform_sf_sum(level, table);
  return Interval{b_range.lo + sum, b_range.hi + sum};
}

double baker_b(double a, double r) {
  if (a < 2.2 || a > 9.18) {
    throw OutOfRange("linear b(a) relation holds for a in [2.2, 9.18], got " +
                     std::to_string(a));
  }
  if (r < 0.0 || r > 1.0) {
    throw OutOfRange("scatter position r must lie in [0, 1]");
  }
  return -0.03 * a + 1.46 + 0.1 * r;
}

std::pair<double, double> effort_envelope(double kloc, const TuningTable& table,
                                          std::optional<double> linear_a) {
  if (!(kloc > 0.0)) {
    throw InvalidKloc("effort envelope needs kloc > 0");
  }
  const BoundsEnvelope envelope = derive_envelope(table);
  const double scale = linear_a.value_or(1.0);
  return {scale * envelope.em_min * std::pow(kloc, envelope.y_min()),
          scale * envelope.em_max * std::pow(kloc, envelope.y_max())};
}

double sensitivity_ratio(double kloc, const TuningTable& table) {
  if (!(kloc > 0.0)) {
    throw InvalidKloc("sensitivity ratio needs kloc > 0");
  }
  const BoundsEnvelope envelope = derive_envelope(table);
  return (envelope.em_max / envelope.em_min) *
         std::pow(kloc, envelope.y_max() - envelope.y_min());
}

std::vector<GrowthCurve> growth_curves(std::span<const Rating> levels,
                                       BoundSide side,
                                       std::span<const double> kloc_grid,
                                       const TuningTable& table,
                                       Interval b_range) {
  check_grid(kloc_grid);
  std::vector<GrowthCurve> curves;
  curves.reserve(levels.size());
  for (const Rating level : levels) {
    const Interval y = exponent_range(level, b_range, table);
    const double exponent = side == BoundSide::Lower ? y.lo : y.hi;
    GrowthCurve curve;
    curve.label = std::string(rating_label(level)) + " / " +
                  (side == BoundSide::Lower ? "lower bound" : "upper bound");
    curve.points.reserve(kloc_grid.size());
    for (const double k : kloc_grid) {
      curve.points.emplace_back(k, std::pow(k, exponent));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 2) {
    throw InvalidGrid("log grid needs at least 2 points");
  }
  if (!(lo > 0.0) || !(hi > lo)) {
    throw InvalidGrid("log grid needs 0 < lo < hi");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    grid.push_back(std::exp(log_lo + t * (log_hi - log_lo)));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace esp
