#include "permcalc/oracle.hpp"

#include <algorithm>

namespace permcalc::oracle {

std::uint64_t cycle_count(std::uint32_t n, std::uint32_t l) {
  // C(n, l) * (l-1)!, computed in the order that keeps intermediates small.
  std::uint64_t binom = 1;
  for (std::uint32_t k = 1; k <= l; ++k)
    binom = binom * (n - l + k) / k;
  std::uint64_t fact = 1;
  for (std::uint32_t k = 2; k + 1 <= l; ++k) fact *= k;
  return binom * fact;
}

void enumerate_cycles(std::uint32_t n, std::uint32_t l,
                      const std::function<bool(const Cycle&)>& visit) {
  if (l < 2 || l > n) throw RangeError("enumerate_cycles needs 2 <= l <= n");

  // Lexicographically next l-subset of {1..n}.
  std::vector<std::uint32_t> subset(l);
  for (std::uint32_t k = 0; k < l; ++k) subset[k] = k + 1;
  auto next_subset = [&]() -> bool {
    std::int64_t i = l - 1;
    while (i >= 0 && subset[i] == n - l + 1 + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (std::uint32_t k = i + 1; k < l; ++k) subset[k] = subset[k - 1] + 1;
    return true;
  };

  do {
    // Fix the minimum first; permute the rest for the (l-1)! rotations.
    std::vector<std::uint32_t> rest(subset.begin() + 1, subset.end());
    do {
      Cycle c;
      c.points.reserve(l);
      c.points.push_back(subset[0]);
      c.points.insert(c.points.end(), rest.begin(), rest.end());
      if (!visit(c)) return;
    } while (std::next_permutation(rest.begin(), rest.end()));
  } while (next_subset());
}

std::optional<FactorizationCertificate> brute_force_two_cycle(
    const Permutation& sigma, std::uint32_t l1, std::uint32_t l2,
    std::uint64_t budget) {
  const std::uint32_t n = sigma.degree();
  if (l2 < 2 || l2 > l1 || l1 > n)
    throw LengthOutOfRange("need 2 <= l2 <= l1 <= " + std::to_string(n));
  if (cycle_count(n, l1) > budget)
    throw BudgetExceeded("search space " + std::to_string(cycle_count(n, l1)) +
                         " exceeds budget " + std::to_string(budget));

  std::optional<FactorizationCertificate> found;
  enumerate_cycles(n, l1, [&](const Cycle& c1) {
    Permutation rest = compose(inverse(cycle_as_perm(c1, n)), sigma);
    CycleDecomposition d = decompose(rest);
    if (d.cycles.size() == 1 && d.cycles[0].length() == l2) {
      found = FactorizationCertificate::make(sigma, c1, d.cycles[0]);
      return false;
    }
    return true;
  });
  return found;
}

ClassTransversal class_transversal(std::uint32_t n) {
  if (n < 1 || n > 12)
    throw RangeError("class transversal supported for 1 <= n <= 12");

  ClassTransversal out;
  out.degree = n;

  // All partitions of n in descending part order, generated recursively.
  std::vector<std::uint32_t> current;
  auto emit = [&]() {
    out.partitions.push_back(current);
    std::vector<std::vector<std::uint32_t>> cycles;
    std::uint32_t next = 1;
    for (std::uint32_t part : current) {
      if (part >= 2) {
        std::vector<std::uint32_t> cycle(part);
        for (std::uint32_t k = 0; k < part; ++k) cycle[k] = next + k;
        cycles.push_back(std::move(cycle));
      }
      next += part;
    }
    out.representatives.push_back(Permutation::from_cycles(n, cycles));
  };
  std::function<void(std::uint32_t, std::uint32_t)> rec =
      [&](std::uint32_t remaining, std::uint32_t max_part) {
        if (remaining == 0) {
          emit();
          return;
        }
        for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
          current.push_back(part);
          rec(remaining - part, part);
          current.pop_back();
        }
      };
  rec(n, n);
  return out;
}

}  // namespace permcalc::oracle
