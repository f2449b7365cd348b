#include "esp/model.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace esp {
namespace {

constexpr double NA = std::numeric_limits<double>::quiet_NaN();

// Rows follow the Attr enumeration; columns run VeryLow .. ExtraHigh.
constexpr double kDefaultCells[kAttrCount][kRatingCount] = {
    {5.07, 4.05, 3.04, 2.03, 1.01, NA},    // flex
    {7.80, 6.24, 4.68, 3.12, 1.56, NA},    // pmat
    {6.20, 4.96, 3.72, 2.48, 1.24, NA},    // prec
    {7.07, 5.65, 4.24, 2.83, 1.41, NA},    // resl
    {5.48, 4.38, 3.29, 2.19, 1.01, NA},    // team
    {1.42, 1.19, 1.00, 0.85, 0.71, NA},    // acap
    {1.22, 1.10, 1.00, 0.88, 0.81, NA},    // aexp
    {0.73, 0.87, 1.00, 1.17, 1.34, 1.74},  // cplx
    {NA, 0.90, 1.00, 1.14, 1.28, NA},      // data
    {0.81, 0.91, 1.00, 1.11, 1.23, NA},    // docu
    {1.20, 1.09, 1.00, 0.91, 0.84, NA},    // ltex
    {1.34, 1.15, 1.00, 0.88, 0.76, NA},    // pcap
    {1.29, 1.12, 1.00, 0.90, 0.81, NA},    // pcon
    {1.19, 1.09, 1.00, 0.91, 0.85, NA},    // plex
    {NA, 0.87, 1.00, 1.15, 1.30, NA},      // pvol
    {0.82, 0.92, 1.00, 1.10, 1.26, NA},    // rely
    {NA, 0.95, 1.00, 1.07, 1.15, 1.24},    // ruse
    {1.43, 1.14, 1.00, 1.00, 1.00, NA},    // sced
    {1.22, 1.09, 1.00, 0.93, 0.86, 0.80},  // site
    {NA, NA, 1.00, 1.05, 1.17, 1.46},      // stor
    {NA, NA, 1.00, 1.11, 1.29, 1.63},      // time
    {1.17, 1.09, 1.00, 0.90, 0.78, NA},    // tool
};

constexpr std::string_view kAttrNames[kAttrCount] = {
    "flex", "pmat", "prec", "resl", "team", "acap", "aexp", "cplx",
    "data", "docu", "ltex", "pcap", "pcon", "plex", "pvol", "rely",
    "ruse", "sced", "site", "stor", "time", "tool"};

constexpr std::string_view kRatingSymbols[kRatingCount] = {"vl", "l",  "n",
                                                           "h",  "vh", "xh"};

constexpr std::string_view kRatingLabels[kRatingCount] = {
    "very low", "low", "nominal", "high", "very high", "extra high"};

constexpr std::array<Attr, kScaleFactorCount> kScaleFactorList = {
    Attr::Flex, Attr::Pmat, Attr::Prec, Attr::Resl, Attr::Team};

constexpr std::array<Attr, kEffortMultiplierCount> kEffortMultiplierList = {
    Attr::Acap, Attr::Aexp, Attr::Cplx, Attr::Data, Attr::Docu, Attr::Ltex,
    Attr::Pcap, Attr::Pcon, Attr::Plex, Attr::Pvol, Attr::Rely, Attr::Ruse,
    Attr::Sced, Attr::Site, Attr::Stor, Attr::Time, Attr::Tool};

constexpr std::array<Attr, kAttrCount> kAllAttrList = {
    Attr::Flex, Attr::Pmat, Attr::Prec, Attr::Resl, Attr::Team, Attr::Acap,
    Attr::Aexp, Attr::Cplx, Attr::Data, Attr::Docu, Attr::Ltex, Attr::Pcap,
    Attr::Pcon, Attr::Plex, Attr::Pvol, Attr::Rely, Attr::Ruse, Attr::Sced,
    Attr::Site, Attr::Stor, Attr::Time, Attr::Tool};

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

int rating_index(Rating r) { return static_cast<int>(r) - 1; }

}  // namespace

Rating rating_from_int(int value) {
  if (value < 1 || value > kRatingCount) {
    throw OutOfRange("rating code " + std::to_string(value) +
                     " outside 1..6");
  }
  return static_cast<Rating>(value);
}

Rating rating_from_symbol(std::string_view token) {
  const std::string lowered = to_lower(token);
  for (int i = 0; i < kRatingCount; ++i) {
    if (lowered == kRatingSymbols[i]) return static_cast<Rating>(i + 1);
  }
  if (!lowered.empty() && lowered.size() == 1 && lowered[0] >= '1' &&
      lowered[0] <= '6') {
    return rating_from_int(lowered[0] - '0');
  }
  throw UnknownRatingSymbol("unknown rating symbol '" + std::string(token) +
                            "' (expected vl, l, n, h, vh, xh or 1..6)");
}

std::string_view rating_symbol(Rating r) { return kRatingSymbols[rating_index(r)]; }

std::string_view rating_label(Rating r) { return kRatingLabels[rating_index(r)]; }

bool is_scale_factor(Attr attr) {
  return static_cast<int>(attr) < kScaleFactorCount;
}

std::string_view attr_name(Attr attr) {
  return kAttrNames[static_cast<int>(attr)];
}

std::optional<Attr> attr_from_name(std::string_view name) {
  const std::string lowered = to_lower(name);
  for (int i = 0; i < kAttrCount; ++i) {
    if (lowered == kAttrNames[i]) return static_cast<Attr>(i);
  }
  return std::nullopt;
}

std::span<const Attr> scale_factors() { return kScaleFactorList; }

std::span<const Attr> effort_multipliers() { return kEffortMultiplierList; }

std::span<const Attr> all_attrs() { return kAllAttrList; }

TuningTable::TuningTable() {
  for (auto& row : cells_)
    for (double& cell : row) cell = NA;
}

const TuningTable& TuningTable::defaults() {
  static const TuningTable table = [] {
    TuningTable t;
    for (int a = 0; a < kAttrCount; ++a)
      for (int r = 0; r < kRatingCount; ++r) t.cells_[a][r] = kDefaultCells[a][r];
    return t;
  }();
  return table;
}

std::optional<double> TuningTable::cell(Attr attr, Rating r) const {
  const double v = cells_[static_cast<int>(attr)][rating_index(r)];
  if (std::isnan(v)) return std::nullopt;
  return v;
}

double TuningTable::coefficient(Attr attr, Rating r) const {
  const auto v = cell(attr, r);
  if (!v) {
    throw UndefinedTuningCell("no coefficient defined for " +
                              std::string(attr_name(attr)) + " at rating '" +
                              std::string(rating_symbol(r)) + "'");
  }
  return *v;
}

void TuningTable::set(Attr attr, Rating r, double value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw OutOfRange("tuning coefficient for " + std::string(attr_name(attr)) +
                     " must be finite and positive");
  }
  cells_[static_cast<int>(attr)][rating_index(r)] = value;
}

double TuningTable::min_coefficient(Attr attr) const {
  double best = NA;
  for (const double v : cells_[static_cast<int>(attr)]) {
    if (std::isnan(v)) continue;
    if (std::isnan(best) || v < best) best = v;
  }
  if (std::isnan(best)) {
    throw UndefinedTuningCell("attribute " + std::string(attr_name(attr)) +
                              " has no defined coefficients");
  }
  return best;
}

double TuningTable::max_coefficient(Attr attr) const {
  double best = NA;
  for (const double v : cells_[static_cast<int>(attr)]) {
    if (std::isnan(v)) continue;
    if (std::isnan(best) || v > best) best = v;
  }
  if (std::isnan(best)) {
    throw UndefinedTuningCell("attribute " + std::string(attr_name(attr)) +
                              " has no defined coefficients");
  }
  return best;
}

Rating Project::rating(Attr attr) const {
  const int i = static_cast<int>(attr);
  return is_scale_factor(attr) ? sf[i] : em[i - kScaleFactorCount];
}

void Project::set_rating(Attr attr, Rating r) {
  const int i = static_cast<int>(attr);
  if (is_scale_factor(attr)) {
    sf[i] = r;
  } else {
    em[i - kScaleFactorCount] = r;
  }
}

Project Project::all_nominal(std::string id, double kloc,
                             std::optional<double> actual_effort) {
  Project p;
  p.id = std::move(id);
  p.kloc = kloc;
  p.actual_effort = actual_effort;
  return p;
}

double scale_factor_sum(const Project& p, const TuningTable& t) {
  double sum = 0.0;
  for (const Attr attr : scale_factors()) sum += t.coefficient(attr, p.rating(attr));
  return 0.01 * sum;
}

double effort_multiplier_product(const Project& p, const TuningTable& t) {
  double prod = 1.0;
  for (const Attr attr : effort_multipliers())
    prod *= t.coefficient(attr, p.rating(attr));
  return prod;
}

double estimate_effort(const Project& p, const CalibrationParams& params,
                       const TuningTable& t) {
  if (!(p.kloc > 0.0)) {
    throw InvalidKloc("project '" + p.id + "': kloc must be > 0, got " +
                      std::to_string(p.kloc));
  }
  const double exponent = params.b + scale_factor_sum(p, t);
  return params.a * effort_multiplier_product(p, t) * std::pow(p.kloc, exponent);
}

}  // namespace esp
