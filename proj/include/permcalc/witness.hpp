#pragma once

#include <cstdint>
#include <vector>

#include "permcalc/factorization.hpp"
#include "permcalc/permutation.hpp"
#include "permcalc/rational.hpp"
#include "permcalc/sofic_profile.hpp"

namespace permcalc::witness {

/// The interval cycle (s, s+1, ..., t) in S_n; identity when s == t.
Permutation interval_cycle(std::uint32_t s, std::uint32_t t, std::uint32_t n);

/// Replaces the selected cycles of p (indices into decompose(p).cycles) by a
/// single cycle on the union of their supports. Changes p at exactly one
/// point per selected cycle, so hamming(p, result) <= |selected| / n.
/// Selecting zero or one cycle returns p unchanged.
Permutation glue_cycles(const Permutation& p,
                        const std::vector<std::size_t>& cycle_indices);

struct ApproxConjugacy {
  Permutation r;
  Rational defect;                  // hamming(r p r^-1, q), measured
  std::uint64_t unmatched_mass = 0; // points on cycles without a partner
};

/// Best-effort conjugation of p toward q: cycles of equal length are matched
/// greedily in canonical order, each side's excess is glued into one cycle,
/// and the glued leftovers are mapped onto each other positionally. The
/// measured defect never exceeds unmatched_mass / n, and is 0 when the cycle
/// types agree.
ApproxConjugacy approximate_conjugator(const Permutation& p, const Permutation& q);

/// A constructed finite-level witness: the parts, the profile they were
/// asked to realize, and the profile actually measured from their product.
struct WitnessReport {
  SoficProfile target = SoficProfile::identity_profile();
  SoficProfile achieved = SoficProfile::identity_profile();
  Rational defect;                  // max pointwise profile discrepancy
  std::vector<Permutation> parts;
};

/// Realizes a target class with inf mass c_q as a product of m conjugates of
/// a class with inf mass c_p, at degree n. Feasible exactly when
/// c_q <= m * c_p (InfeasibleTarget otherwise). Every part consists of long
/// cycles with total support within 2 of c_p*n; the product's measured long
/// mass lands within (m+2)/n of c_q.
WitnessReport build_power_class_witness(std::uint32_t n, const Rational& c_p,
                                        const Rational& c_q, std::uint32_t m);

/// Writes p as a product of two cycles of normalized lengths close to the
/// targets (c1 >= c2 > 0), provided p's statistics satisfy the two-class
/// predicate with slack of at least 3/n on both inequalities
/// (SlackTooSmall otherwise). The certificate lengths land within 5/n of
/// n*c1 and n*c2.
FactorizationCertificate build_two_class_witness(const Permutation& p,
                                                 const Rational& c1,
                                                 const Rational& c2);

/// Max absolute discrepancy between two profiles over all finite lengths
/// and the infinite mass.
Rational profile_distance(const SoficProfile& a, const SoficProfile& b);

}  // namespace permcalc::witness
