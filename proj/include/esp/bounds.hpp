#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "esp/model.hpp"

namespace esp {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Default range of the exponent base b: the published nominal 0.91 up to the
// value the linear b(a) relation yields at its smallest admissible a.
inline constexpr Interval kDefaultBRange{0.91, 1.394};

struct LevelExponentRange {
  Rating level = Rating::Nominal;
  Interval y;  // total exponent b + 0.01 * sum(SF) across the b range
};

// Analytical worst-case envelope of the effort equation over all rating
// assignments, excluding the linear calibration constant a.
struct BoundsEnvelope {
  Interval b_range;
  // One row per uniform scale-factor level, VeryLow .. VeryHigh.
  std::array<LevelExponentRange, 5> exponents;
  double em_min = 0.0;  // product of each effort multiplier's smallest cell
  double em_max = 0.0;  // product of each effort multiplier's largest cell

  // Extreme total exponents: best-rated level at the low end of the b range,
  // worst-rated level at the high end.
  double y_min() const { return exponents.back().y.lo; }
  double y_max() const { return exponents.front().y.hi; }
};

BoundsEnvelope derive_envelope(const TuningTable& table = TuningTable::defaults(),
                               Interval b_range = kDefaultBRange);

// Total exponent interval when all five scale factors sit at `level`.
// Levels above VeryHigh have no scale-factor coefficients.
Interval exponent_range(Rating level, Interval b_range = kDefaultBRange,
                        const TuningTable& table = TuningTable::defaults());

// Linear relation b(a) = -0.03 * a + 1.46 + 0.1 * r between the effort
// equation's two calibration parameters, with r in [0, 1] spanning the
// +/-0.05 scatter band; valid for a in [2.2, 9.18]. Throws OutOfRange.
double baker_b(double a, double r);

// Smallest and largest effort multiplier product times kloc^Y at the extreme
// exponents; multiplied by linear_a when given, otherwise the constant a is
// deliberately excluded. Throws InvalidKloc.
std::pair<double, double> effort_envelope(
    double kloc, const TuningTable& table = TuningTable::defaults(),
    std::optional<double> linear_a = std::nullopt);

// max/min estimate ratio at one kloc: (em_max/em_min) * kloc^(y_max - y_min).
// Grows with kloc, so size mistakes hurt big projects the most.
double sensitivity_ratio(double kloc,
                         const TuningTable& table = TuningTable::defaults());

enum class BoundSide { Lower, Upper };

struct GrowthCurve {
  std::string label;  // e.g. "very low / upper bound"
  std::vector<std::pair<double, double>> points;  // (kloc, kloc^Y)
};

// One effort-growth curve kloc^Y per requested scale-factor level, with Y the
// chosen envelope corner for that level. The grid must be positive and
// strictly increasing with at least two points (InvalidGrid otherwise).
std::vector<GrowthCurve> growth_curves(
    std::span<const Rating> levels, BoundSide side,
    std::span<const double> kloc_grid,
    const TuningTable& table = TuningTable::defaults(),
    Interval b_range = kDefaultBRange);

// Logarithmically spaced grid with inclusive endpoints.
std::vector<double> log_grid(double lo = 1.0, double hi = 10000.0,
                             int points = 50);

}  // namespace esp
