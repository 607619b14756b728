#include <doctest.h>

#include "permcalc/oracle.hpp"
#include "permcalc/rng.hpp"
#include "permcalc/sofic_profile.hpp"

using namespace permcalc;

namespace {

SoficProfile prof(std::map<std::uint64_t, Rational> masses, Rational inf) {
  return SoficProfile::make(std::move(masses), inf);
}

Permutation pc(std::uint32_t n, std::vector<std::vector<std::uint32_t>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

}  // namespace

TEST_CASE("profiles enforce normalization at construction") {
  CHECK_NOTHROW(prof({{1, Rational(1, 2)}}, Rational(1, 2)));
  CHECK_THROWS_AS(prof({{1, Rational(1, 2)}}, Rational(1, 4)), DomainError);
  CHECK_THROWS_AS(prof({{1, Rational(3, 2)}}, Rational(-1, 2)), DomainError);
  CHECK_THROWS_AS(prof({{0, Rational(1)}}, Rational(0)), DomainError);

  SoficProfile p = prof({{1, Rational(1, 2)}, {2, Rational(0)}}, Rational(1, 2));
  CHECK(p.masses().count(2) == 0);  // zero masses dropped
}

TEST_CASE("derived m and n") {
  SoficProfile p = prof({{1, Rational(1, 2)}, {2, Rational(1, 4)},
                         {5, Rational(1, 8)}},
                        Rational(1, 8));
  CHECK(p.m_value() == Rational(1, 2));
  CHECK(p.n_value() == Rational(1, 8) + Rational(1, 40));
}

TEST_CASE("profile_of finite approximants") {
  SoficProfile id = profile_of(Permutation::identity(10), 4);
  CHECK(id == SoficProfile::identity_profile());

  SoficProfile full = profile_of(pc(8, {{1, 2, 3, 4, 5, 6, 7, 8}}), 8);
  CHECK(full.inf_mass() == Rational(1));

  SoficProfile small = profile_of(pc(6, {{1, 2, 3}, {4, 5}}), 10);
  CHECK(small.mass_at(1) == Rational(1, 6));
  CHECK(small.mass_at(2) == Rational(1, 3));
  CHECK(small.mass_at(3) == Rational(1, 2));
  CHECK(small.inf_mass() == Rational(0));

  // threshold splits finite from infinite
  SoficProfile cut = profile_of(pc(6, {{1, 2, 3}, {4, 5}}), 3);
  CHECK(cut.mass_at(3) == Rational(0));
  CHECK(cut.inf_mass() == Rational(1, 2));

  CHECK(default_inf_threshold(100) == 10);
  CHECK(default_inf_threshold(101) == 11);
  CHECK(default_inf_threshold(1) == 1);
}

TEST_CASE("sequence stats") {
  PermSequence seq;
  seq.levels.push_back(Permutation::identity(4));
  seq.levels.push_back(Permutation::identity(9));
  auto profiles = sequence_stats(seq);
  REQUIRE(profiles.size() == 2);
  CHECK(profiles[0] == SoficProfile::identity_profile());
  CHECK(profiles[1] == SoficProfile::identity_profile());

  PermSequence bad;
  bad.levels.push_back(Permutation::identity(9));
  bad.levels.push_back(Permutation::identity(4));
  CHECK_THROWS_AS(sequence_stats(bad), DomainError);

  // transposition-heavy levels push mass toward length 2
  PermSequence trans;
  for (std::uint32_t n : {8u, 16u, 32u}) {
    std::vector<std::vector<std::uint32_t>> cycles;
    for (std::uint32_t a = 1; a + 1 <= n; a += 2) cycles.push_back({a, a + 1});
    trans.levels.push_back(Permutation::from_cycles(n, cycles));
  }
  auto tp = sequence_stats(trans);
  CHECK(tp.back().mass_at(2) == Rational(1));
}

TEST_CASE("conjugate_equiv is finite-mass equality") {
  SoficProfile a = prof({{1, Rational(1, 2)}}, Rational(1, 2));
  SoficProfile b = prof({{2, Rational(1, 2)}}, Rational(1, 2));
  CHECK(conjugate_equiv(a, a));
  CHECK_FALSE(conjugate_equiv(a, b));

  Permutation p = pc(6, {{1, 2, 3}, {4, 5}});
  Permutation q = pc(6, {{2, 4, 6}, {1, 3}});
  CHECK(conjugate_equiv(profile_of(p, 7), profile_of(q, 7)));
}

TEST_CASE("in_cyc_1_inf") {
  CHECK(in_cyc_1_inf(SoficProfile::identity_profile()));
  CHECK(in_cyc_1_inf(prof({{1, Rational(1, 2)}}, Rational(1, 2))));
  CHECK_FALSE(in_cyc_1_inf(prof({{2, Rational(1)}}, Rational(0))));
}

TEST_CASE("power_profile") {
  SoficProfile two = prof({{2, Rational(1)}}, Rational(0));
  CHECK(power_profile(two, 2) == SoficProfile::identity_profile());

  SoficProfile in_class = prof({{1, Rational(1, 3)}}, Rational(2, 3));
  for (std::uint64_t m = 1; m <= 6; ++m) CHECK(power_profile(in_class, m) == in_class);

  // finite cross-check against an actual permutation, threshold above degree
  Permutation p = pc(12, {{1, 2, 3, 4}, {5, 6, 7}, {8, 9}});
  for (std::uint64_t m = 1; m <= 6; ++m)
    CHECK(power_profile(profile_of(p, 13), m) ==
          profile_of(power(p, static_cast<std::int64_t>(m)), 13));

  // with a finite threshold the cross-check holds as long as no mass crosses
  // it: squaring keeps the 8-cycle's mass long (two 4-cycles) and the
  // 2-cycle's mass short
  Permutation q = pc(12, {{1, 2, 3, 4, 5, 6, 7, 8}, {9, 10}});
  CHECK(power_profile(profile_of(q, 4), 2) == profile_of(power(q, 2), 4));
  // the 4th power pushes the long mass below the threshold, so the profile
  // power law no longer tracks the actual permutation
  CHECK(power_profile(profile_of(q, 4), 4) != profile_of(power(q, 4), 4));
}

TEST_CASE("powers stay in class exactly for cyc({1,inf}) profiles") {
  CHECK(powers_stay_in_class(prof({{1, Rational(1, 3)}}, Rational(2, 3))));
  CHECK_FALSE(powers_stay_in_class(prof({{2, Rational(1)}}, Rational(0))));
  CHECK_FALSE(powers_stay_in_class(prof({{1, Rational(1, 2)}, {3, Rational(1, 2)}},
                                        Rational(0))));
}

TEST_CASE("in_class_power") {
  auto cyc = [](Rational inf) { return prof({{1, Rational(1) - inf}}, inf); };
  CHECK(in_class_power(cyc(Rational(1, 2)), cyc(Rational(3, 10)), 2));
  CHECK_FALSE(in_class_power(cyc(Rational(1, 2)), cyc(Rational(0)), 2));
  CHECK(in_class_power(cyc(Rational(1)), cyc(Rational(1, 2)), 2));  // boundary

  // monotone in m on a rational grid
  for (std::int64_t q = 1; q <= 12; ++q)
    for (std::int64_t kp = 0; kp <= q; ++kp)
      for (std::int64_t kq = 0; kq <= q; ++kq) {
        SoficProfile base = cyc(Rational(kp, q));
        SoficProfile target = cyc(Rational(kq, q));
        for (std::uint64_t m = 2; m < 8; ++m)
          if (in_class_power(target, base, m))
            CHECK(in_class_power(target, base, m + 1));
      }

  SoficProfile off = prof({{2, Rational(1)}}, Rational(0));
  CHECK_THROWS_AS(in_class_power(off, cyc(Rational(1, 2)), 2), DomainError);
  CHECK_THROWS_AS(in_class_power(cyc(Rational(1, 2)), off, 2), DomainError);
}

TEST_CASE("covers_from") {
  auto cyc = [](Rational inf) { return prof({{1, Rational(1) - inf}}, inf); };
  CHECK(covers_from(cyc(Rational(1, 2)), 2));       // boundary
  CHECK_FALSE(covers_from(cyc(Rational(1, 3)), 2));
  CHECK(covers_from(cyc(Rational(1)), 7));
  CHECK_THROWS_AS(covers_from(prof({{2, Rational(1)}}, Rational(0)), 2), DomainError);
}

TEST_CASE("bracket_index") {
  CHECK(bracket_index(Rational(1)) == 1);
  CHECK(bracket_index(Rational(1, 2)) == 2);
  CHECK(bracket_index(Rational(2, 5)) == 3);
  CHECK(bracket_index(Rational(1, 100)) == 100);
  CHECK_THROWS_AS(bracket_index(Rational(0)), DomainError);
  CHECK_THROWS_AS(bracket_index(Rational(3, 2)), DomainError);
}

TEST_CASE("in_two_class_product") {
  auto cyc = [](Rational inf) { return prof({{1, Rational(1) - inf}}, inf); };
  // m(P)=1/2, n(P)=1/10 realized with mass 1/5 at length 2, rest long.
  SoficProfile p = prof({{1, Rational(1, 2)}, {2, Rational(1, 5)}}, Rational(3, 10));
  CHECK(p.m_value() == Rational(1, 2));
  CHECK(p.n_value() == Rational(1, 10));
  CHECK(in_two_class_product(p, cyc(Rational(2, 5)), cyc(Rational(3, 10))));

  // identity p: true iff q1.inf == q2.inf
  SoficProfile id = SoficProfile::identity_profile();
  CHECK(in_two_class_product(id, cyc(Rational(1, 4)), cyc(Rational(1, 4))));
  CHECK_FALSE(in_two_class_product(id, cyc(Rational(1, 2)), cyc(Rational(1, 4))));

  // boundary: p in cyc({1,inf}) with inf exactly the sum
  SoficProfile edge = cyc(Rational(7, 10));
  CHECK(in_two_class_product(edge, cyc(Rational(2, 5)), cyc(Rational(3, 10))));

  CHECK_THROWS_AS(in_two_class_product(p, cyc(Rational(1, 4)), cyc(Rational(0))),
                  DomainError);
  CHECK_THROWS_AS(in_two_class_product(p, cyc(Rational(1, 4)), cyc(Rational(1, 2))),
                  DomainError);
}

TEST_CASE("trace_constraints") {
  auto cyc = [](Rational inf) { return prof({{1, Rational(1) - inf}}, inf); };

  SoficProfile p = prof({{1, Rational(1, 2)}, {2, Rational(1, 5)}}, Rational(3, 10));
  TraceReport same = trace_constraints(p, p);
  CHECK(same.all_hold);
  CHECK(same.n_nonincreasing_implied);

  // m grows: the sum constraint fails
  SoficProfile grown = prof({{1, Rational(2, 5)}, {2, Rational(1, 5)}}, Rational(2, 5));
  TraceReport bad = trace_constraints(p, grown);
  CHECK_FALSE(bad.sum_nonincreasing);
  CHECK_FALSE(bad.all_hold);

  // bracket mismatch: 2/5 -> bracket 3, 3/5 -> bracket 2
  TraceReport brk = trace_constraints(cyc(Rational(2, 5)), cyc(Rational(3, 5)));
  CHECK(brk.bracket_applicable);
  CHECK(brk.bracket_before == 3);
  CHECK(brk.bracket_after == 2);
  CHECK_FALSE(brk.bracket_equal);
  CHECK_FALSE(brk.all_hold);

  // zero inf on both sides still brackets equal
  TraceReport zero = trace_constraints(cyc(Rational(0)), cyc(Rational(0)));
  CHECK(zero.bracket_applicable);
  CHECK(zero.bracket_equal);
}

TEST_CASE("three-way agreement on small class representatives") {
  for (std::uint32_t n = 2; n <= 5; ++n) {
    auto tr = oracle::class_transversal(n);
    for (const auto& p : tr.representatives) {
      for (const auto& q : tr.representatives) {
        bool types = cycle_type(p) == cycle_type(q);
        bool conj = true;
        try {
          conj = conjugate(p, conjugator(p, q)) == q;
        } catch (const CycleTypeMismatch&) {
          conj = false;
        }
        bool profs = conjugate_equiv(profile_of(p, n + 1), profile_of(q, n + 1));
        CHECK(types == conj);
        CHECK(types == profs);
      }
    }
  }
}
