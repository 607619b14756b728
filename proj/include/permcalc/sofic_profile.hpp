#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "permcalc/cycle_type.hpp"
#include "permcalc/permutation.hpp"
#include "permcalc/rational.hpp"

namespace permcalc {

/// Asymptotic cycle statistics of (an approximation to) an ultraproduct
/// element: an exact-rational mass per finite cycle length plus the
/// residual mass inf_mass carried by cycles whose length grows without
/// bound. Masses are nonnegative and sum to 1 with inf_mass; this is
/// checked at construction. These numbers determine the conjugacy class
/// at the limit, so a profile doubles as a class label.
class SoficProfile {
public:
  /// Validates nonnegativity and normalization; zero masses are dropped.
  static SoficProfile make(std::map<std::uint64_t, Rational> masses,
                           Rational inf_mass);

  /// Profile entirely concentrated on fixed points (the identity class).
  static SoficProfile identity_profile();

  /// Profile with all mass at infinity (the class cyc({inf})).
  static SoficProfile full_inf_profile();

  const std::map<std::uint64_t, Rational>& masses() const { return masses_; }
  Rational inf_mass() const { return inf_mass_; }

  Rational mass_at(std::uint64_t length) const {
    auto it = masses_.find(length);
    return it == masses_.end() ? Rational(0) : it->second;
  }

  /// m(P) = 1 - masses[1], the normalized support.
  Rational m_value() const;

  /// n(P) = sum over i >= 2 of masses[i] / i, the normalized count of
  /// nontrivial cycles.
  Rational n_value() const;

  friend bool operator==(const SoficProfile&, const SoficProfile&) = default;

private:
  SoficProfile() = default;

  std::map<std::uint64_t, Rational> masses_;
  Rational inf_mass_;
};

/// Finite approximation of an ultraproduct element: one permutation per
/// level, degrees nondecreasing.
struct PermSequence {
  std::vector<Permutation> levels;
};

/// Default cut between "finite" and "infinite" cycle lengths for a finite
/// approximant: ceil(sqrt(n)).
std::uint64_t default_inf_threshold(std::uint64_t degree);

/// Finite-scale profile: masses[i] = cyc_i(p)/n for i < inf_threshold, all
/// mass at lengths >= inf_threshold assigned to inf_mass. Thresholds above
/// the degree are allowed and make the profile exact.
SoficProfile profile_of(const Permutation& p, std::uint64_t inf_threshold);
SoficProfile profile_of(const Permutation& p);

using ThresholdRule = std::function<std::uint64_t(std::uint64_t degree)>;

/// Per-level profiles of a sequence; the rule picks each level's threshold
/// (default ceil(sqrt(n_k))). Degrees must be nondecreasing.
std::vector<SoficProfile> sequence_stats(const PermSequence& s,
                                         const ThresholdRule& rule = {});

/// Conjugacy in the ultraproduct: profiles agree at every finite length
/// (equality at infinity then follows from normalization).
bool conjugate_equiv(const SoficProfile& a, const SoficProfile& b);

/// Membership in cyc({1,inf}): no finite mass at lengths >= 2.
bool in_cyc_1_inf(const SoficProfile& p);

/// Profile of the m-th power: finite mass at L moves to L / gcd(L, m),
/// infinite mass stays infinite.
SoficProfile power_profile(const SoficProfile& p, std::uint64_t m);

/// Whether every power of the class stays in the class. Decided by checking
/// power_profile against the profile for every exponent up to the largest
/// finite supported length (lengths never grow under powers, so the sweep
/// is exhaustive). Holds exactly for profiles in cyc({1,inf}).
bool powers_stay_in_class(const SoficProfile& p);

/// q in Cl(p)^m for p, q in cyc({1,inf}) and m > 1: exactly
/// q.inf_mass <= m * p.inf_mass. Throws DomainError off cyc({1,inf}).
bool in_class_power(const SoficProfile& q, const SoficProfile& p, std::uint64_t m);

/// Cl(p)^m covers cyc({inf}) (equivalently all of cyc({1,inf})):
/// exactly p.inf_mass >= 1/m. Throws DomainError off cyc({1,inf}).
bool covers_from(const SoficProfile& p, std::uint64_t m);

/// The unique m >= 1 with 1/m <= c < 1/(m-1); m = 1 exactly when c == 1.
/// Throws DomainError unless 0 < c <= 1.
std::uint64_t bracket_index(const Rational& c);

/// p in Cl(q1) Cl(q2) for q1, q2 in cyc({1,inf}) with
/// q1.inf >= q2.inf > 0: both of
///   m(p) + n(p) <= q1.inf + q2.inf
///   m(p) - n(p) >= q1.inf - q2.inf
/// Throws DomainError when the preconditions on q1, q2 fail.
bool in_two_class_product(const SoficProfile& p, const SoficProfile& q1,
                          const SoficProfile& q2);

/// Constraint check for a candidate automorphism input/output pair.
struct TraceReport {
  Rational m_before, n_before, m_after, n_after;
  bool sum_nonincreasing = false;   // m+n must not grow
  bool diff_nondecreasing = false;  // m-n must not shrink
  bool bracket_applicable = false;  // both profiles in cyc({1,inf})
  bool bracket_equal = false;
  std::uint64_t bracket_before = 0;  // 0 when not applicable or inf == 0
  std::uint64_t bracket_after = 0;
  bool n_nonincreasing_implied = false;  // follows from the two inequalities
  bool all_hold = false;
};

TraceReport trace_constraints(const SoficProfile& p, const SoficProfile& image);

}  // namespace permcalc
