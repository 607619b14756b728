#include "permcalc/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "permcalc/cycle_type.hpp"
#include "permcalc/factorization.hpp"
#include "permcalc/kernels.hpp"
#include "permcalc/oracle.hpp"
#include "permcalc/permutation.hpp"
#include "permcalc/rng.hpp"
#include "permcalc/serialize.hpp"
#include "permcalc/sofic_profile.hpp"
#include "permcalc/witness.hpp"

namespace permcalc::verify {

namespace {

// Collects assertion outcomes; keeps the first failure message.
struct Checker {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

std::string partition_label(const std::vector<std::uint32_t>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

// Criterion 1: factorization.feasible vs the exhaustive oracle on every
// class representative of S_2..S_max and every admissible (l1, l2), plus a
// verifying certificate on every feasible triple.
SuiteResult run_hkl(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "hkl";
  res.criterion = 1;
  Checker ck;
  const std::uint32_t max_n = opt.max_n ? opt.max_n : 7;

  serialize::json table = serialize::json::array();
  const bool emit_table = !opt.table_path.empty();

  for (std::uint32_t n = 2; n <= max_n; ++n) {
    oracle::ClassTransversal tr = oracle::class_transversal(n);
    for (std::size_t rep = 0; rep < tr.representatives.size(); ++rep) {
      const Permutation& sigma = tr.representatives[rep];
      for (std::uint32_t l1 = 2; l1 <= n; ++l1) {
        for (std::uint32_t l2 = 2; l2 <= l1; ++l2) {
          FeasibilityWitness w = feasible(sigma, l1, l2);
          auto brute = oracle::brute_force_two_cycle(sigma, l1, l2, opt.budget);
          std::ostringstream label;
          label << "n=" << n << " type=" << partition_label(tr.partitions[rep])
                << " l1=" << l1 << " l2=" << l2;
          ck.expect(w.ok() == brute.has_value(),
                    "feasible() disagrees with brute force at " + label.str() +
                        " (feasible=" + (w.ok() ? "yes" : "no") + ")");
          if (w.ok()) {
            try {
              FactorizationCertificate cert = factorize(sigma, l1, l2);
              ck.expect(cert.c1.length() == l1 && cert.c2.length() == l2,
                        "certificate lengths wrong at " + label.str());
            } catch (const std::exception& e) {
              ck.expect(false, "factorize failed at " + label.str() + ": " + e.what());
            }
          }
          if (emit_table) {
            serialize::json row;
            row["n"] = n;
            row["type"] = partition_label(tr.partitions[rep]);
            row["l1"] = l1;
            row["l2"] = l2;
            row["feasible"] = w.ok();
            table.push_back(std::move(row));
          }
        }
      }
    }
  }
  if (emit_table) {
    std::ofstream out(opt.table_path);
    out << table.dump(2) << '\n';
  }
  res.checks = ck.checks;
  res.failures = ck.failures;
  res.passed = ck.failures == 0;
  res.detail = res.passed ? "oracle agreement on S_2.." + std::to_string(max_n)
                          : ck.first_failure;
  return res;
}

// Criterion 2: cyc_1(p^i) equals the divisor sum of the cycle type, and the
// inclusion-exclusion formula reproduces every finite mass, both exactly.
SuiteResult run_identities(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "identities";
  res.criterion = 2;
  Checker ck;
  const std::uint32_t max_n = std::max(2u, opt.max_n ? opt.max_n : 10'000);
  const int trials = 10'000;
  const std::uint64_t max_power = 30;
  Rng rng(opt.seed);

  for (int trial = 0; trial < trials && ck.failures == 0; ++trial) {
    std::uint32_t n = static_cast<std::uint32_t>(rng.between(2, max_n));
    Permutation p = random_permutation(n, rng);
    CycleType t = cycle_type(p);

    std::map<std::uint64_t, std::uint64_t> fix;
    std::vector<std::uint32_t> pw(p.raw().begin(), p.raw().end());
    std::vector<std::uint32_t> scratch(n);
    for (std::uint64_t i = 1; i <= max_power; ++i) {
      if (i > 1) {
        kernels::compose_into(scratch, pw, p.raw());
        pw.swap(scratch);
      }
      std::uint64_t direct = kernels::count_fixed(pw);
      fix[i] = direct;
      ck.expect(direct == fixed_points_of_power(t, i),
                "divisor-sum identity failed at trial " + std::to_string(trial) +
                    " i=" + std::to_string(i));
    }
    for (std::uint64_t i = 1; i <= max_power; ++i) {
      std::int64_t recovered = cyc_by_inclusion_exclusion(fix, i);
      ck.expect(recovered == static_cast<std::int64_t>(t.mass_at(i)),
                "inclusion-exclusion failed at trial " + std::to_string(trial) +
                    " i=" + std::to_string(i));
    }
  }
  res.checks = ck.checks;
  res.failures = ck.failures;
  res.passed = ck.failures == 0;
  res.detail = res.passed ? "divisor-sum and inclusion-exclusion exact on " +
                                std::to_string(trials) + " permutations"
                          : ck.first_failure;
  return res;
}

// Criterion 3: Hamming metric axioms and the normalized triangle inequality
// 1 - cyc1(pq) <= (1 - cyc1(p)) + (1 - cyc1(q)), all exact at n = 1e4.
SuiteResult run_metric(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "metric";
  res.criterion = 3;
  Checker ck;
  const std::uint32_t n = opt.max_n ? opt.max_n : 10'000;
  const int trials = 10'000;
  Rng rng(opt.seed);
  const Permutation id = Permutation::identity(n);

  for (int trial = 0; trial < trials && ck.failures == 0; ++trial) {
    Permutation p = random_permutation(n, rng);
    Permutation q = random_permutation(n, rng);
    const std::string at = " at trial " + std::to_string(trial);

    Rational dpq = hamming(p, q);
    ck.expect(dpq == hamming(q, p), "symmetry failed" + at);
    ck.expect(hamming(p, p).is_zero(), "d(p,p) != 0" + at);
    ck.expect((p == q) == dpq.is_zero(), "zero-iff-equal failed" + at);

    Permutation r = random_permutation(n, rng);
    ck.expect(hamming(p, r) <= hamming(p, q) + hamming(q, r),
              "metric triangle failed" + at);

    Permutation pq = compose(p, q);
    ck.expect(hamming(pq, id) <= hamming(p, id) + hamming(q, id),
              "product support inequality failed" + at);
  }
  res.checks = ck.checks;
  res.failures = ck.failures;
  res.passed = ck.failures == 0;
  res.detail = res.passed ? "metric axioms exact on " + std::to_string(trials) +
                                " pairs at n=" + std::to_string(n)
                          : ck.first_failure;
  return res;
}

// Criterion 4: cycle-type equality, conjugator success, and profile
// equality agree on every pair of class representatives, n <= 7.
SuiteResult run_conjugacy(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "conjugacy";
  res.criterion = 4;
  Checker ck;
  const std::uint32_t max_n = opt.max_n ? opt.max_n : 7;

  for (std::uint32_t n = 2; n <= max_n; ++n) {
    oracle::ClassTransversal tr = oracle::class_transversal(n);
    for (std::size_t i = 0; i < tr.representatives.size(); ++i) {
      for (std::size_t j = 0; j < tr.representatives.size(); ++j) {
        const Permutation& p = tr.representatives[i];
        const Permutation& q = tr.representatives[j];
        bool types_equal = cycle_type(p) == cycle_type(q);
        bool conj_ok = false;
        try {
          Permutation r = conjugator(p, q);
          conj_ok = conjugate(p, r) == q;
        } catch (const CycleTypeMismatch&) {
          conj_ok = false;
        }
        bool profiles_equal =
            conjugate_equiv(profile_of(p, n + 1), profile_of(q, n + 1));
        std::string label = "n=" + std::to_string(n) + " i=" + std::to_string(i) +
                            " j=" + std::to_string(j);
        ck.expect(types_equal == conj_ok,
                  "type equality vs conjugator mismatch at " + label);
        ck.expect(types_equal == profiles_equal,
                  "type equality vs profile mismatch at " + label);
      }
    }
  }
  res.checks = ck.checks;
  res.failures = ck.failures;
  res.passed = ck.failures == 0;
  res.detail = res.passed ? "three-way agreement on S_2.." + std::to_string(max_n)
                          : ck.first_failure;
  return res;
}

// Criterion 5: power-class witnesses at n = 1e5 on a 20-point grid: part
// supports within 2/n of c_p, product long mass within (m+2)/n of c_q,
// finite masses within (m+2)/n of zero.
SuiteResult run_power_witness(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "power-witness";
  res.criterion = 5;
  Checker ck;
  const std::uint32_t n = opt.max_n ? opt.max_n : 100'000;

  struct GridPoint {
    std::uint32_t m;
    Rational c_p, c_q;
  };
  const std::vector<GridPoint> grid = {
      {2, {3, 10}, {1, 2}}, {2, {1, 2}, {1, 2}},  {2, {1, 2}, {1, 1}},
      {2, {1, 4}, {1, 2}},  {2, {2, 5}, {3, 10}}, {2, {3, 5}, {4, 5}},
      {3, {1, 10}, {3, 10}}, {3, {1, 5}, {1, 2}}, {3, {1, 3}, {1, 3}},
      {3, {1, 2}, {1, 5}},  {3, {1, 3}, {1, 1}},  {3, {2, 5}, {9, 10}},
      {4, {1, 8}, {1, 2}},  {4, {1, 4}, {3, 4}},  {4, {3, 4}, {1, 2}},
      {4, {1, 5}, {4, 5}},  {5, {1, 10}, {1, 2}}, {5, {1, 5}, {4, 5}},
      {5, {3, 10}, {1, 10}}, {5, {1, 2}, {9, 10}},
  };

  const Rational nr(static_cast<std::int64_t>(n));
  for (const auto& g : grid) {
    std::string label = "m=" + std::to_string(g.m) + " c_p=" + g.c_p.str() +
                        " c_q=" + g.c_q.str();
    witness::WitnessReport rep;
    try {
      rep = witness::build_power_class_witness(n, g.c_p, g.c_q, g.m);
    } catch (const std::exception& e) {
      ck.expect(false, "witness construction failed at " + label + ": " + e.what());
      continue;
    }
    ck.expect(rep.parts.size() == g.m, "part count wrong at " + label);
    const Rational part_tol(2);
    for (const auto& part : rep.parts) {
      Rational support(static_cast<std::int64_t>(support_stats(part).support));
      ck.expect(Rational::abs(support - g.c_p * nr) <= part_tol,
                "part support off target at " + label);
    }
    const Rational tol(static_cast<std::int64_t>(g.m) + 2,
                       static_cast<std::int64_t>(n));
    ck.expect(Rational::abs(rep.achieved.inf_mass() - g.c_q) <= tol,
              "long-cycle mass off target at " + label + " (got " +
                  rep.achieved.inf_mass().str() + ")");
    for (const auto& [len, mass] : rep.achieved.masses())
      if (len >= 2)
        ck.expect(mass <= tol, "finite mass survived at " + label + " (length " +
                                   std::to_string(len) + ")");
  }
  res.checks = ck.checks;
  res.failures = ck.failures;
  res.passed = ck.failures == 0;
  res.detail = res.passed ? "20 grid points within tolerance at n=" +
                                std::to_string(n)
                          : ck.first_failure;
  return res;
}

// Random permutation with a prescribed number of nontrivial cycles and
// support size, laid out on consecutive points then relabeled.
Permutation structured_permutation(std::uint32_t n, std::uint64_t support,
                                   std::uint64_t cycles, Rng& rng) {
  std::vector<std::uint64_t> lengths(cycles, 2);
  std::uint64_t extra = support - 2 * cycles;
  for (std::uint64_t k = 0; k < extra; ++k)
    ++lengths[rng.below(cycles)];
  std::vector<std::vector<std::uint32_t>> cycle_points;
  std::uint32_t next = 1;
  for (std::uint64_t len : lengths) {
    std::vector<std::uint32_t> c;
    for (std::uint64_t k = 0; k < len; ++k) c.push_back(next++);
    cycle_points.push_back(std::move(c));
  }
  Permutation base = Permutation::from_cycles(n, cycle_points);
  return conjugate(base, random_permutation(n, rng));
}

// Criterion 6: two-class witnesses at n = 1e3 on 100 random instances that
// satisfy the predicate with slack >= 3/n; certificate lengths within 5/n.
SuiteResult run_two_class_witness(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "two-class-witness";
  res.criterion = 6;
  Checker ck;
  const std::uint32_t n = std::max(64u, opt.max_n ? opt.max_n : 1'000);
  const int trials = 100;
  Rng rng(opt.seed);
  const Rational nr(static_cast<std::int64_t>(n));
  const Rational slack(3, static_cast<std::int64_t>(n));

  const std::uint64_t max_cycles = std::min<std::uint64_t>(20, (n * 4 / 5 - 3) / 2);
  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t cycles = rng.between(1, max_cycles);
    // Leave room for the 3/n slack: support - cycles >= 3 keeps the target
    // interval nonempty.
    std::uint64_t support = rng.between(2 * cycles + 3, n * 4 / 5);
    Permutation p = structured_permutation(n, support, cycles, rng);

    Rational m_norm(static_cast<std::int64_t>(support), n);
    Rational n_norm(static_cast<std::int64_t>(cycles), n);

    // diff in [0, m-n-3/n], sum in [m+n+3/n, 2-diff], both on a 16-grid.
    Rational diff_max = m_norm - n_norm - slack;
    Rational diff = diff_max * Rational(static_cast<std::int64_t>(rng.below(17)), 16);
    Rational sum_lo = m_norm + n_norm + slack;
    Rational sum_hi = Rational(2) - diff;
    Rational sum =
        sum_lo + (sum_hi - sum_lo) *
                     Rational(static_cast<std::int64_t>(rng.below(17)), 16);
    Rational c1 = (sum + diff) / Rational(2);
    Rational c2 = (sum - diff) / Rational(2);

    std::string label = "trial " + std::to_string(trial) + " c1=" + c1.str() +
                        " c2=" + c2.str();
    try {
      FactorizationCertificate cert = witness::build_two_class_witness(p, c1, c2);
      Rational l1(static_cast<std::int64_t>(cert.c1.length()));
      Rational l2(static_cast<std::int64_t>(cert.c2.length()));
      ck.expect(Rational::abs(l1 - c1 * nr) <= Rational(5),
                "l1 off target at " + label);
      ck.expect(Rational::abs(l2 - c2 * nr) <= Rational(5),
                "l2 off target at " + label);
      ck.expect(compose(cert.c1_perm(), cert.c2_perm()) == p,
                "certificate product mismatch at " + label);
    } catch (const std::exception& e) {
      ck.expect(false, "witness failed at " + label + ": " + e.what());
    }
  }
  res.checks = ck.checks;
  res.failures = ck.failures;
  res.passed = ck.failures == 0;
  res.detail = res.passed ? std::to_string(trials) + " certificates within 5/n at n=" +
                                std::to_string(n)
                          : ck.first_failure;
  return res;
}

// Criterion 7: profile predicate coherence on exact rational grids.
SuiteResult run_profiles(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "profiles";
  res.criterion = 7;
  Checker ck;
  const std::uint32_t max_den = opt.max_n ? opt.max_n : 20;

  // powers_stay_in_class == in_cyc_1_inf over mass grids on lengths 1,2,3.
  for (std::uint32_t q = 2; q <= max_den; q += 3) {
    for (std::uint32_t k1 = 0; k1 <= q; ++k1)
      for (std::uint32_t k2 = 0; k1 + k2 <= q; ++k2)
        for (std::uint32_t k3 = 0; k1 + k2 + k3 <= q; ++k3) {
          std::map<std::uint64_t, Rational> masses;
          masses[1] = Rational(k1, q);
          masses[2] = Rational(k2, q);
          masses[3] = Rational(k3, q);
          SoficProfile p = SoficProfile::make(
              std::move(masses), Rational(static_cast<std::int64_t>(q - k1 - k2 - k3), q));
          ck.expect(powers_stay_in_class(p) == in_cyc_1_inf(p),
                    "powers_stay_in_class vs in_cyc_1_inf at q=" + std::to_string(q) +
                        " (" + std::to_string(k1) + "," + std::to_string(k2) + "," +
                        std::to_string(k3) + ")");
        }
  }

  // covers_from(P, m) == in_class_power(full-inf, P, m), and monotonicity
  // of in_class_power in m, over all inf masses with denominator <= 20.
  SoficProfile full_inf = SoficProfile::full_inf_profile();
  for (std::uint32_t q = 1; q <= max_den; ++q) {
    for (std::uint32_t k = 0; k <= q; ++k) {
      SoficProfile p = SoficProfile::make(
          {{1, Rational(static_cast<std::int64_t>(q - k), q)}}, Rational(k, q));
      bool prev = false;
      for (std::uint64_t m = 2; m <= 24; ++m) {
        bool covers = covers_from(p, m);
        bool via_power = in_class_power(full_inf, p, m);
        ck.expect(covers == via_power,
                  "covers_from vs in_class_power at inf=" + Rational(k, q).str() +
                      " m=" + std::to_string(m));
        ck.expect(!prev || covers,
                  "covers_from not monotone at inf=" + Rational(k, q).str());
        prev = covers;
      }
    }
  }

  // bracket_index inverts the interval family [1/m, 1/(m-1)) for m <= 100.
  ck.expect(bracket_index(Rational(1)) == 1, "bracket_index(1) != 1");
  for (std::int64_t m = 2; m <= 100; ++m) {
    Rational lo(1, m);
    ck.expect(bracket_index(lo) == static_cast<std::uint64_t>(m),
              "bracket at left endpoint 1/" + std::to_string(m));
    Rational mid = (Rational(1, m) + Rational(1, m - 1)) / Rational(2);
    ck.expect(bracket_index(mid) == static_cast<std::uint64_t>(m),
              "bracket at midpoint for m=" + std::to_string(m));
    Rational near_top(1000, 1000 * (m - 1) + 1);  // just below 1/(m-1)
    ck.expect(bracket_index(near_top) == static_cast<std::uint64_t>(m),
              "bracket just below right endpoint for m=" + std::to_string(m));
  }

  res.checks = ck.checks;
  res.failures = ck.failures;
  res.passed = ck.failures == 0;
  res.detail = res.passed ? "predicate coherence exact on rational grids"
                          : ck.first_failure;
  return res;
}

// Builds one member of the synthetic family for criterion 8: prescribed
// 2-cycle and 3-cycle counts, one long cycle of fixed length, rest fixed.
Permutation family_member(std::uint32_t n, std::uint64_t twos,
                          std::uint64_t threes, std::uint64_t long_len) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t next = 1;
  auto add = [&](std::uint64_t len, std::uint64_t count) {
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> cyc;
      for (std::uint64_t k = 0; k < len; ++k) cyc.push_back(next++);
      cycles.push_back(std::move(cyc));
    }
  };
  add(2, twos);
  add(3, threes);
  add(long_len, 1);
  return Permutation::from_cycles(n, cycles);
}

// Criterion 8: approximate conjugator defect <= (e+3)/n on synthetic pairs
// with a common target profile, nonincreasing as n grows.
SuiteResult run_approx_conjugator(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "approx-conjugator";
  res.criterion = 8;
  Checker ck;
  (void)opt;

  const std::vector<std::uint32_t> sizes = {1'000, 10'000, 100'000};
  for (int family = 0; family < 2; ++family) {
    Rational prev_defect(1);
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      std::uint32_t n = sizes[k];
      // Both sides approximate the same profile; the variants differ by one
      // 2-cycle, one 3-cycle and the resulting fixed-point slack.
      std::uint64_t twos = n / 8 / 2;
      std::uint64_t threes = n / 8 / 3;
      std::uint64_t long_len = family == 0 ? n / 4 : n / 3;
      Permutation p = family_member(n, twos, threes, long_len);
      Permutation q = family_member(n, twos - 1, threes + 1, long_len);

      witness::ApproxConjugacy ac = witness::approximate_conjugator(p, q);
      Rational bound(static_cast<std::int64_t>(ac.unmatched_mass) + 3,
                     static_cast<std::int64_t>(n));
      std::string label = "family " + std::to_string(family) + " n=" +
                          std::to_string(n);
      ck.expect(ac.defect <= bound,
                "defect above (e+3)/n at " + label + " (defect " +
                    ac.defect.str() + ", e=" + std::to_string(ac.unmatched_mass) + ")");
      ck.expect(ac.defect <= prev_defect,
                "defect grew with n at " + label);
      prev_defect = ac.defect;
    }
  }

  res.checks = ck.checks;
  res.failures = ck.failures;
  res.passed = ck.failures == 0;
  res.detail = res.passed ? "defect bounded and nonincreasing on both families"
                          : ck.first_failure;
  return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hkl",           "identities",        "metric",   "conjugacy",
      "power-witness", "two-class-witness", "profiles", "approx-conjugator"};
  return names;
}

std::string suite_title(const std::string& name) {
  if (name == "hkl") return "two-cycle feasibility matches the exhaustive oracle";
  if (name == "identities") return "fixed-point/power identities are exact";
  if (name == "metric") return "Hamming metric axioms and product inequality";
  if (name == "conjugacy") return "cycle type, conjugator and profile agree";
  if (name == "power-witness") return "power-class witnesses hit their targets";
  if (name == "two-class-witness") return "two-class certificates hit their targets";
  if (name == "profiles") return "profile predicates cohere on rational grids";
  if (name == "approx-conjugator") return "approximate conjugator defect bound";
  return name;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "hkl") return run_hkl(options);
  if (name == "identities") return run_identities(options);
  if (name == "metric") return run_metric(options);
  if (name == "conjugacy") return run_conjugacy(options);
  if (name == "power-witness") return run_power_witness(options);
  if (name == "two-class-witness") return run_two_class_witness(options);
  if (name == "profiles") return run_profiles(options);
  if (name == "approx-conjugator") return run_approx_conjugator(options);
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace permcalc::verify
