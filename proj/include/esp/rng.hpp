#pragma once

#include <cstddef>
#include <cstdint>

namespace esp::rng {

// splitmix64 output scrambler (Steele, Lea & Vigna; public-domain reference
// implementation at https://prng.di.unimi.it/splitmix64.c).
constexpr std::uint64_t scramble(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Deterministic child key for counter-based stream splitting. Results depend
// only on (key, index), never on draw order, so sub-streams for (treatment,
// repeat, project, ...) tuples are reproducible under any evaluation order.
constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t index) {
  return scramble(key + (index + 1) * kGolden);
}

template <typename... Rest>
constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t index,
                               Rest... rest) {
  return derive(derive(key, index), rest...);
}

// Counter-mode splitmix64 generator.
class Stream {
 public:
  explicit constexpr Stream(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kGolden;
    return scramble(state_);
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n); n must be positive. Uses the multiply-shift
  // range reduction, whose bias is negligible for n << 2^64.
  std::size_t next_below(std::size_t n) {
    using u128 = unsigned __int128;
    return static_cast<std::size_t>(
        (static_cast<u128>(next()) * static_cast<u128>(n)) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace esp::rng
