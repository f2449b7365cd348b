#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "esp/errors.hpp"

namespace esp {

// Ordinal rating scale shared by every model attribute. Numeric codes 1..6
// and the symbols vl, l, n, h, vh, xh are interchangeable in data files.
enum class Rating : int {
  VeryLow = 1,
  Low = 2,
  Nominal = 3,
  High = 4,
  VeryHigh = 5,
  ExtraHigh = 6,
};

inline constexpr int kRatingCount = 6;

Rating rating_from_int(int value);                  // throws OutOfRange
Rating rating_from_symbol(std::string_view token);  // throws UnknownRatingSymbol
std::string_view rating_symbol(Rating r);           // "vl" .. "xh"
std::string_view rating_label(Rating r);            // "very low" .. "extra high"

// The 22 model attributes: 5 scale factors acting in the exponent and 17
// effort multipliers acting linearly.
enum class Attr : int {
  // scale factors
  Flex,
  Pmat,
  Prec,
  Resl,
  Team,
  // effort multipliers
  Acap,
  Aexp,
  Cplx,
  Data,
  Docu,
  Ltex,
  Pcap,
  Pcon,
  Plex,
  Pvol,
  Rely,
  Ruse,
  Sced,
  Site,
  Stor,
  Time,
  Tool,
};

inline constexpr int kScaleFactorCount = 5;
inline constexpr int kEffortMultiplierCount = 17;
inline constexpr int kAttrCount = kScaleFactorCount + kEffortMultiplierCount;

bool is_scale_factor(Attr attr);
std::string_view attr_name(Attr attr);  // lowercase, as used in CSV headers
std::optional<Attr> attr_from_name(std::string_view name);  // case-insensitive
std::span<const Attr> scale_factors();
std::span<const Attr> effort_multipliers();
std::span<const Attr> all_attrs();

// Attribute/rating -> coefficient map. Cells the model leaves undefined stay
// empty, and looking one up is a hard error rather than a silent 1.0.
class TuningTable {
 public:
  TuningTable();  // all cells undefined

  // The published year-2000 calibration. Scale-factor coefficients decrease
  // from VeryLow to VeryHigh; every effort multiplier is exactly 1 at Nominal.
  static const TuningTable& defaults();

  std::optional<double> cell(Attr attr, Rating r) const;
  double coefficient(Attr attr, Rating r) const;  // throws UndefinedTuningCell
  void set(Attr attr, Rating r, double value);    // value must be finite, > 0

  // Extremes over the defined cells of one attribute's row.
  double min_coefficient(Attr attr) const;
  double max_coefficient(Attr attr) const;

 private:
  std::array<std::array<double, kRatingCount>, kAttrCount> cells_;
};

namespace detail {
template <std::size_t N>
constexpr std::array<Rating, N> nominal_ratings() {
  std::array<Rating, N> out{};
  for (auto& r : out) r = Rating::Nominal;
  return out;
}
}  // namespace detail

// One project record: 22 symbolic ratings, size in thousands of delivered
// source lines, and optionally the recorded actual effort in person-months
// (one person-month = 152 hours).
struct Project {
  std::string id;
  std::array<Rating, kScaleFactorCount> sf =
      detail::nominal_ratings<kScaleFactorCount>();
  std::array<Rating, kEffortMultiplierCount> em =
      detail::nominal_ratings<kEffortMultiplierCount>();
  double kloc = 0.0;
  std::optional<double> actual_effort;

  Rating rating(Attr attr) const;
  void set_rating(Attr attr, Rating r);

  static Project all_nominal(std::string id, double kloc,
                             std::optional<double> actual_effort = std::nullopt);

  bool operator==(const Project&) const = default;
};

// Linear coefficient and exponent base of the effort equation.
struct CalibrationParams {
  double a = 2.94;
  double b = 0.91;
};

// 0.01 * sum of the five scale-factor coefficients at the project's ratings.
double scale_factor_sum(const Project& p, const TuningTable& t);

// Product of the seventeen effort-multiplier coefficients.
double effort_multiplier_product(const Project& p, const TuningTable& t);

// Person-months: a * prod(EM) * kloc^(b + 0.01 * sum(SF)).
// Throws InvalidKloc if kloc <= 0, UndefinedTuningCell on an empty cell.
double estimate_effort(const Project& p, const CalibrationParams& params,
                       const TuningTable& t);

}  // namespace esp
