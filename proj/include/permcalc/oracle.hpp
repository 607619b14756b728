#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "permcalc/factorization.hpp"
#include "permcalc/permutation.hpp"

namespace permcalc::oracle {

// Brute force ground truth on small symmetric groups. Everything here is
// deliberately dumb: no algebraic shortcuts, so the decision procedures in
// factorization can be validated against plain enumeration.

/// Number of l-cycles in S_n: C(n, l) * (l-1)!.
std::uint64_t cycle_count(std::uint32_t n, std::uint32_t l);

/// Visits every l-cycle of S_n exactly once (lexicographic supports, then
/// orderings with the minimum first). The visitor returns false to stop
/// early. Requires 2 <= l <= n.
void enumerate_cycles(std::uint32_t n, std::uint32_t l,
                      const std::function<bool(const Cycle&)>& visit);

/// Scans all l1-cycles C and tests whether C^-1 sigma is an l2-cycle;
/// returns the first certificate found. Throws BudgetExceeded when the
/// number of candidates exceeds the budget.
std::optional<FactorizationCertificate> brute_force_two_cycle(
    const Permutation& sigma, std::uint32_t l1, std::uint32_t l2,
    std::uint64_t budget = 50'000'000);

/// One representative per conjugacy class of S_n: for each integer
/// partition of n, cycles laid out on consecutive intervals, largest first.
struct ClassTransversal {
  std::uint32_t degree = 0;
  std::vector<std::vector<std::uint32_t>> partitions;  // descending parts
  std::vector<Permutation> representatives;            // same order
};

/// Requires n <= 12 (RangeError) to keep the partition count small.
ClassTransversal class_transversal(std::uint32_t n);

}  // namespace permcalc::oracle
