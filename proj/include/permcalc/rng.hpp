#pragma once

#include <cstdint>
#include <random>

namespace permcalc {

/// Seeded generator with a platform-independent bounded draw.
///
/// std::uniform_int_distribution is not pinned by the standard, so tests
/// that must be byte-reproducible across toolchains use this instead.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, bound), bound >= 1. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi] inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace permcalc
