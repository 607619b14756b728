#pragma once

#include <cstdint>

#include "permcalc/permutation.hpp"

namespace permcalc {

/// Outcome of the two-cycle feasibility test for (sigma, l1, l2).
///
/// A factorization sigma = c1 c2 into cycles of lengths l1 >= l2 exists
/// exactly when the pair is sigma's own disjoint-cycle pair (canonical
/// clause) or both arithmetic conditions hold:
///   (1) l1 + l2 = m(sigma) + n(sigma) + 2s for some s >= 0   (parity/range)
///   (2) l1 - l2 <= m(sigma) - n(sigma)                        (balance)
/// where m is the support size and n the number of nontrivial cycles.
struct FeasibilityWitness {
  enum class Verdict { feasible_parity, feasible_canonical, infeasible };
  enum class Reason { none, parity, range, balance };

  Verdict verdict = Verdict::infeasible;
  Reason reason = Reason::none;
  std::uint64_t s = 0;            // slack in condition (1) when feasible_parity
  std::uint64_t support = 0;      // m(sigma)
  std::uint64_t cycle_count = 0;  // n(sigma)

  bool ok() const { return verdict != Verdict::infeasible; }
  const char* reason_name() const;
};

/// Self-verifying product-of-two-cycles certificate: composing c1 with c2
/// (c2 acting first) reproduces the target exactly; this is checked by full
/// evaluation at construction. Lengths satisfy 2 <= c2 <= c1 <= degree.
struct FactorizationCertificate {
  Cycle c1;
  Cycle c2;
  std::uint32_t degree = 0;

  static FactorizationCertificate make(const Permutation& sigma, Cycle c1,
                                       Cycle c2);

  Permutation c1_perm() const { return cycle_as_perm(c1, degree); }
  Permutation c2_perm() const { return cycle_as_perm(c2, degree); }
};

/// Decides whether sigma is a product of an l1-cycle and an l2-cycle.
/// Requires 2 <= l2 <= l1 <= degree (LengthOutOfRange otherwise).
FeasibilityWitness feasible(const Permutation& sigma, std::uint32_t l1,
                            std::uint32_t l2);

/// Constructs a certificate for any feasible (sigma, l1, l2); throws
/// InfeasibleError naming the violated condition otherwise. Deterministic.
FactorizationCertificate factorize(const Permutation& sigma, std::uint32_t l1,
                                   std::uint32_t l2);

/// The base pair: a cycle through the full support of sigma and a cycle
/// through one junction point per nontrivial cycle, of lengths m(sigma) and
/// n(sigma). Requires at least two nontrivial cycles (DomainError).
FactorizationCertificate base_factorization(const Permutation& sigma);

}  // namespace permcalc
