#include <doctest.h>

#include <map>

#include "permcalc/cycle_type.hpp"
#include "permcalc/kernels.hpp"
#include "permcalc/rng.hpp"

using namespace permcalc;

namespace {

Permutation pc(std::uint32_t n, std::vector<std::vector<std::uint32_t>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

std::uint64_t direct_fixed_points(const Permutation& p, std::uint64_t i) {
  return kernels::count_fixed(power(p, static_cast<std::int64_t>(i)).raw());
}

// Test-only oracle: recover masses[i] from |Fix(p^d)| by Mobius inversion
// over the divisor lattice. Independent of cyc_by_inclusion_exclusion.
std::int64_t mobius(std::uint64_t n) {
  std::int64_t mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::int64_t mass_by_mobius(const std::map<std::uint64_t, std::uint64_t>& fix,
                            std::uint64_t i) {
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= i; ++d)
    if (i % d == 0)
      total += mobius(i / d) * static_cast<std::int64_t>(fix.at(d));
  return total;
}

}  // namespace

TEST_CASE("divisor sum counts fixed points of powers") {
  // p = (1 2)(3 4 5) in S_6: p^2 = (3 5 4) fixes {1, 2, 6}.
  Permutation p = pc(6, {{1, 2}, {3, 4, 5}});
  CycleType t = cycle_type(p);
  CHECK(fixed_points_of_power(t, 2) == 3);
  CHECK(direct_fixed_points(p, 2) == 3);

  CHECK(fixed_points_of_power(t, 1) == t.mass_at(1));
  CycleType id = cycle_type(Permutation::identity(9));
  for (std::uint64_t i = 1; i <= 5; ++i) CHECK(fixed_points_of_power(id, i) == 9);
}

TEST_CASE("inclusion-exclusion reproduces the masses") {
  // cyc_2(p) = cyc_1(p^2) - cyc_1(p)
  Permutation p = pc(6, {{1, 2}, {3, 4, 5}});
  std::map<std::uint64_t, std::uint64_t> fix;
  for (std::uint64_t i = 1; i <= 6; ++i) fix[i] = direct_fixed_points(p, i);
  CHECK(cyc_by_inclusion_exclusion(fix, 2) ==
        static_cast<std::int64_t>(fix[2] - fix[1]));
  CHECK(cyc_by_inclusion_exclusion(fix, 2) == 2);

  // 6-cycle: 6 - 0 - 0 + 0 = 6
  Permutation six = pc(6, {{1, 2, 3, 4, 5, 6}});
  std::map<std::uint64_t, std::uint64_t> fix6;
  for (std::uint64_t i : {1, 2, 3, 6}) fix6[i] = direct_fixed_points(six, i);
  CHECK(fix6[1] == 0);
  CHECK(fix6[6] == 6);
  CHECK(cyc_by_inclusion_exclusion(fix6, 6) == 6);

  // i = 1 is the bare lookup
  CHECK(cyc_by_inclusion_exclusion(fix, 1) == static_cast<std::int64_t>(fix[1]));

  std::map<std::uint64_t, std::uint64_t> missing = {{1, 0}};
  CHECK_THROWS_AS(cyc_by_inclusion_exclusion(missing, 2), MissingDivisor);
}

TEST_CASE("power_type moves mass to shortened lengths") {
  CycleType t4 = cycle_type(pc(4, {{1, 2, 3, 4}}));
  CycleType sq = power_type(t4, 2);
  CHECK(sq.mass_at(2) == 4);
  CHECK(sq.mass_at(4) == 0);

  // all transpositions squared become fixed points
  CycleType pairs = cycle_type(pc(6, {{1, 2}, {3, 4}, {5, 6}}));
  CHECK(power_type(pairs, 2).mass_at(1) == 6);

  CHECK(power_type(t4, 1) == t4);
}

TEST_CASE("identities agree with direct evaluation on random permutations") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint32_t n = static_cast<std::uint32_t>(rng.between(2, 800));
    Permutation p = random_permutation(n, rng);
    CycleType t = cycle_type(p);

    std::map<std::uint64_t, std::uint64_t> fix;
    for (std::uint64_t i = 1; i <= 30; ++i) {
      fix[i] = direct_fixed_points(p, i);
      CHECK(fix[i] == fixed_points_of_power(t, i));
    }
    for (std::uint64_t i = 1; i <= 30; ++i) {
      std::int64_t expected = static_cast<std::int64_t>(t.mass_at(i));
      CHECK(cyc_by_inclusion_exclusion(fix, i) == expected);
      CHECK(mass_by_mobius(fix, i) == expected);
    }

    for (std::uint64_t m = 1; m <= 20; ++m)
      CHECK(power_type(t, m) == cycle_type(power(p, static_cast<std::int64_t>(m))));
  }
}
