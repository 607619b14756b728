#pragma once

#include <cstdint>
#include <map>

#include "permcalc/permutation.hpp"

namespace permcalc {

/// Exact cycle statistics of a finite permutation. masses[i] is the number
/// of points on i-cycles (count of i-cycles times i), so the masses sum to
/// the degree. masses[1] is the number of fixed points. Lengths with zero
/// mass are not stored.
struct CycleType {
  std::uint32_t degree = 0;
  std::map<std::uint64_t, std::uint64_t> masses;

  std::uint64_t mass_at(std::uint64_t length) const {
    auto it = masses.find(length);
    return it == masses.end() ? 0 : it->second;
  }

  /// Number of cycles of the given length (mass / length).
  std::uint64_t count_at(std::uint64_t length) const {
    return mass_at(length) / length;
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

/// Fixed points of the i-th power, from the type alone: sum of masses[j]
/// over divisors j of i.
std::uint64_t fixed_points_of_power(const CycleType& t, std::uint64_t i);

/// Recovers masses[i] from fixed-point counts of powers by the signed sum
/// over the prime-exponent corners of i: given fix[d] = cyc_1(p^d) for every
/// d of the form a_1^{r_1-e_1}...a_t^{r_t-e_t} (i = a_1^{r_1}...a_t^{r_t}),
/// returns sum over e in {0,1}^t of (-1)^(e_1+...+e_t) fix[...].
/// Throws MissingDivisor when a required entry is absent.
std::int64_t cyc_by_inclusion_exclusion(
    const std::map<std::uint64_t, std::uint64_t>& fix, std::uint64_t i);

/// Cycle type of p^m without touching p: mass at length L moves to length
/// L / gcd(L, m).
CycleType power_type(const CycleType& t, std::uint64_t m);

}  // namespace permcalc
