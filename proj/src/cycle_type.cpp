#include "permcalc/cycle_type.hpp"

#include <numeric>
#include <vector>

namespace permcalc {

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  t.degree = p.degree();
  auto img = p.raw();
  std::vector<bool> visited(p.degree(), false);
  for (std::uint32_t start = 0; start < p.degree(); ++start) {
    if (visited[start]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t a = start; !visited[a]; a = img[a]) {
      visited[a] = true;
      ++len;
    }
    t.masses[len] += len;
  }
  return t;
}

std::uint64_t fixed_points_of_power(const CycleType& t, std::uint64_t i) {
  std::uint64_t total = 0;
  for (const auto& [len, mass] : t.masses)
    if (i % len == 0) total += mass;
  return total;
}

std::int64_t cyc_by_inclusion_exclusion(
    const std::map<std::uint64_t, std::uint64_t>& fix, std::uint64_t i) {
  // Prime decomposition of i by trial division; i is bounded by the degree
  // in every use.
  std::vector<std::pair<std::uint64_t, unsigned>> primes;
  std::uint64_t rest = i;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    unsigned r = 0;
    while (rest % d == 0) { rest /= d; ++r; }
    primes.emplace_back(d, r);
  }
  if (rest > 1) primes.emplace_back(rest, 1);

  auto lookup = [&](std::uint64_t d) -> std::int64_t {
    auto it = fix.find(d);
    if (it == fix.end())
      throw MissingDivisor("inclusion-exclusion needs fix[" + std::to_string(d) + "]");
    return static_cast<std::int64_t>(it->second);
  };

  const std::size_t t = primes.size();
  std::int64_t total = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << t); ++bits) {
    std::uint64_t d = i;
    int sign = 1;
    for (std::size_t k = 0; k < t; ++k) {
      if (bits & (std::uint64_t(1) << k)) {
        d /= primes[k].first;
        sign = -sign;
      }
    }
    total += sign * lookup(d);
  }
  return total;
}

CycleType power_type(const CycleType& t, std::uint64_t m) {
  CycleType out;
  out.degree = t.degree;
  for (const auto& [len, mass] : t.masses)
    out.masses[len / std::gcd(len, m)] += mass;
  return out;
}

}  // namespace permcalc
