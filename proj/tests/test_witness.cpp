#include <doctest.h>

#include "permcalc/rng.hpp"
#include "permcalc/witness.hpp"

using namespace permcalc;
namespace wit = permcalc::witness;

namespace {

Permutation pc(std::uint32_t n, std::vector<std::vector<std::uint32_t>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

}  // namespace

TEST_CASE("interval cycles") {
  Permutation c = wit::interval_cycle(2, 5, 6);
  CHECK(c == pc(6, {{2, 3, 4, 5}}));
  CHECK(c.image(1) == 1);
  CHECK(c.image(6) == 6);
  CHECK(wit::interval_cycle(3, 3, 5) == Permutation::identity(5));
  CHECK(support_stats(wit::interval_cycle(1, 7, 7)).cycle_count == 1);
  CHECK_THROWS_AS(wit::interval_cycle(0, 3, 5), RangeError);
  CHECK_THROWS_AS(wit::interval_cycle(4, 3, 5), RangeError);
  CHECK_THROWS_AS(wit::interval_cycle(1, 6, 5), RangeError);
}

TEST_CASE("glue_cycles merges supports and moves few points") {
  Permutation p = pc(4, {{1, 2}, {3, 4}});
  Permutation glued = wit::glue_cycles(p, {0, 1});
  CycleDecomposition d = decompose(glued);
  REQUIRE(d.cycles.size() == 1);
  CHECK(d.cycles[0].length() == 4);
  CHECK(hamming(p, glued) <= Rational(2, 4));

  CHECK(wit::glue_cycles(p, {0}) == p);
  CHECK(wit::glue_cycles(p, {}) == p);
  CHECK_THROWS_AS(wit::glue_cycles(p, {2}), BadIndex);
}

TEST_CASE("glue_cycles hamming change equals the junction count") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint32_t n = static_cast<std::uint32_t>(rng.between(8, 300));
    Permutation p = random_permutation(n, rng);
    CycleDecomposition d = decompose(p);
    if (d.cycles.size() < 2) continue;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < d.cycles.size(); ++i)
      if (rng.below(2) == 0) chosen.push_back(i);
    if (chosen.size() < 2) continue;

    Permutation glued = wit::glue_cycles(p, chosen);
    CHECK(hamming(p, glued) ==
          Rational(static_cast<std::int64_t>(chosen.size()), n));

    // the selected supports fused into one cycle, everything else intact
    std::uint64_t fused = 0;
    for (std::size_t i : chosen) fused += d.cycles[i].length();
    CycleDecomposition dg = decompose(glued);
    CHECK(dg.cycles.size() == d.cycles.size() - chosen.size() + 1);
    bool found = false;
    for (const auto& c : dg.cycles) found = found || c.length() == fused;
    CHECK(found);
  }
}

TEST_CASE("approximate conjugator on equal types reduces to a conjugator") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t n = static_cast<std::uint32_t>(rng.between(4, 200));
    Permutation p = random_permutation(n, rng);
    Permutation q = conjugate(p, random_permutation(n, rng));
    wit::ApproxConjugacy ac = wit::approximate_conjugator(p, q);
    CHECK(ac.unmatched_mass == 0);
    CHECK(ac.defect == Rational(0));
    CHECK(conjugate(p, ac.r) == q);
  }
}

TEST_CASE("approximate conjugator defect stays within the unmatched mass") {
  Permutation p = pc(100, {{1, 2}});
  Permutation q = pc(100, {{1, 2, 3}});
  wit::ApproxConjugacy ac = wit::approximate_conjugator(p, q);
  CHECK(ac.unmatched_mass == 3);  // one 2-cycle + one 3-cycle - shared fixed slack
  CHECK(ac.defect <= Rational(5, 100));
  CHECK(ac.defect <= Rational(static_cast<std::int64_t>(ac.unmatched_mass), 100));

  // against the identity the defect is the support fraction of the glued p
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint32_t n = static_cast<std::uint32_t>(rng.between(10, 500));
    Permutation a = random_permutation(n, rng);
    wit::ApproxConjugacy ac2 = wit::approximate_conjugator(a, Permutation::identity(n));
    CHECK(ac2.defect <=
          Rational(static_cast<std::int64_t>(ac2.unmatched_mass), n));
  }
}

TEST_CASE("approximate conjugator on random pairs") {
  Rng rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t n = static_cast<std::uint32_t>(rng.between(4, 300));
    Permutation p = random_permutation(n, rng);
    Permutation q = random_permutation(n, rng);
    wit::ApproxConjugacy ac = wit::approximate_conjugator(p, q);
    CHECK(ac.defect <=
          Rational(static_cast<std::int64_t>(ac.unmatched_mass), n));
    // r is a valid permutation: conjugation defines one
    CHECK(cycle_type(conjugate(p, ac.r)) == cycle_type(p));
  }
}

TEST_CASE("power-class witness spans both construction cases") {
  const std::uint32_t n = 10'000;
  const Rational nr(n);

  // staggered case: c_q > c_p
  wit::WitnessReport rep = wit::build_power_class_witness(n, Rational(3, 10),
                                                          Rational(1, 2), 2);
  REQUIRE(rep.parts.size() == 2);
  for (const auto& part : rep.parts) {
    SupportStats s = support_stats(part);
    CHECK(s.cycle_count == 1);
    CHECK(Rational::abs(Rational(static_cast<std::int64_t>(s.support)) -
                        Rational(3, 10) * nr) <= Rational(2));
  }
  CHECK(Rational::abs(rep.achieved.inf_mass() - Rational(1, 2)) <= Rational(4, n));

  // canceling case: c_q <= c_p, zero-length tail when equal. The product is
  // the m-th power of one kept cycle, so gcd(r, m) long cycles of equal size.
  wit::WitnessReport eq = wit::build_power_class_witness(n, Rational(1, 2),
                                                         Rational(1, 2), 2);
  Permutation product = Permutation::identity(n);
  for (const auto& part : eq.parts) product = compose(part, product);
  CycleDecomposition d = decompose(product);
  REQUIRE(d.cycles.size() == 2);
  CHECK(d.cycles[0].length() == n / 4);
  CHECK(d.cycles[1].length() == n / 4);
  CHECK(eq.achieved.inf_mass() == Rational(1, 2));

  wit::WitnessReport cancel = wit::build_power_class_witness(n, Rational(1, 2),
                                                             Rational(1, 5), 3);
  CHECK(Rational::abs(cancel.achieved.inf_mass() - Rational(1, 5)) <=
        Rational(5, n));

  CHECK_THROWS_AS(wit::build_power_class_witness(n, Rational(1, 10), Rational(1, 2), 2),
                  InfeasibleTarget);
  CHECK_THROWS_AS(wit::build_power_class_witness(n, Rational(1, 2), Rational(1, 2), 1),
                  RangeError);
}

TEST_CASE("witness reports measure the parts, not the target") {
  wit::WitnessReport rep = wit::build_power_class_witness(1'000, Rational(1, 4),
                                                          Rational(2, 5), 2);
  Permutation product = Permutation::identity(1'000);
  for (const auto& part : rep.parts) product = compose(part, product);
  CHECK(rep.achieved == profile_of(product));
  CHECK(rep.defect == wit::profile_distance(rep.target, rep.achieved));
}

TEST_CASE("power-class witness tolerances on awkward rationals") {
  const std::uint32_t n = 20'000;
  const Rational nr(n);
  struct Case {
    std::uint32_t m;
    Rational cp, cq;
  };
  for (const Case& c : std::vector<Case>{{2, {1, 7}, {2, 7}},
                                         {3, {4, 17}, {11, 17}},
                                         {3, {2, 7}, {4, 7}},
                                         {4, {1, 13}, {4, 13}},
                                         {5, {3, 17}, {14, 17}},
                                         {2, {5, 7}, {5, 7}},
                                         {3, {6, 7}, {1, 7}},
                                         {6, {1, 11}, {6, 11}}}) {
    if (c.cq > Rational(c.m) * c.cp) continue;
    wit::WitnessReport rep = wit::build_power_class_witness(n, c.cp, c.cq, c.m);
    Rational tol(static_cast<std::int64_t>(c.m) + 2, n);
    CHECK(Rational::abs(rep.achieved.inf_mass() - c.cq) <= tol);
    for (const auto& [len, mass] : rep.achieved.masses())
      if (len >= 2) CHECK(mass <= tol);
    for (const auto& part : rep.parts) {
      Rational support(static_cast<std::int64_t>(support_stats(part).support));
      CHECK(Rational::abs(support - c.cp * nr) <= Rational(2));
    }
  }
}

TEST_CASE("two-class witness at the exact slack boundary") {
  // support 50, 5 cycles in S_100: m - n = 45/100; targets at slack exactly
  // 3/n on both inequalities.
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t next = 1;
  for (std::uint64_t len : {10, 10, 10, 10, 10}) {
    std::vector<std::uint32_t> c;
    for (std::uint64_t k = 0; k < len; ++k) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  Permutation p = Permutation::from_cycles(100, cycles);
  FactorizationCertificate cert =
      wit::build_two_class_witness(p, Rational(1, 2), Rational(2, 25));
  CHECK(cert.c1.length() == 51);
  CHECK(cert.c2.length() == 10);
  CHECK(compose(cert.c1_perm(), cert.c2_perm()) == p);
}

TEST_CASE("two-class witness on a valid instance") {
  // 150-cycle in S_1000: m = 150/1000, n = 1/1000.
  Permutation p = pc(1'000, {[&] {
    std::vector<std::uint32_t> c(150);
    for (std::uint32_t k = 0; k < 150; ++k) c[k] = k + 1;
    return c;
  }()});
  FactorizationCertificate cert =
      wit::build_two_class_witness(p, Rational(2, 5), Rational(3, 10));
  CHECK(cert.c1.length() >= 398);
  CHECK(cert.c1.length() <= 402);
  CHECK(cert.c2.length() >= 299);
  CHECK(cert.c2.length() <= 303);
  CHECK(compose(cert.c1_perm(), cert.c2_perm()) == p);
}

TEST_CASE("two-class witness rejections") {
  // the identity never satisfies the slack: m - n = 0 < c1 - c2 + 3/n
  CHECK_THROWS_AS(wit::build_two_class_witness(Permutation::identity(1'000),
                                               Rational(1, 4), Rational(1, 4)),
                  SlackTooSmall);

  // support too small for the requested spread
  Permutation tiny = pc(1'000, {{1, 2, 3}, {4, 5}});
  CHECK_THROWS_AS(
      wit::build_two_class_witness(tiny, Rational(2, 5), Rational(3, 10)),
      SlackTooSmall);

  // q2 = 0 is outside the predicate's domain
  Permutation p = pc(1'000, {[&] {
    std::vector<std::uint32_t> c(150);
    for (std::uint32_t k = 0; k < 150; ++k) c[k] = k + 1;
    return c;
  }()});
  CHECK_THROWS_AS(wit::build_two_class_witness(p, Rational(2, 5), Rational(0)),
                  DomainError);
  CHECK_THROWS_AS(wit::build_two_class_witness(p, Rational(1, 4), Rational(2, 5)),
                  DomainError);
}

TEST_CASE("normalized product support inequality on random pairs") {
  Rng rng(45);
  const std::uint32_t n = 2'000;
  Permutation id = Permutation::identity(n);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation p = random_permutation(n, rng);
    Permutation q = random_permutation(n, rng);
    CHECK(hamming(compose(p, q), id) <= hamming(p, id) + hamming(q, id));
  }
}
