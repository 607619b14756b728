#include "permcalc/witness.hpp"

#include <algorithm>
#include <set>

namespace permcalc::witness {

Permutation interval_cycle(std::uint32_t s, std::uint32_t t, std::uint32_t n) {
  if (s < 1 || s > t || t > n)
    throw RangeError("interval cycle needs 1 <= s <= t <= n");
  std::vector<std::uint32_t> raw(n);
  for (std::uint32_t a = 0; a < n; ++a) raw[a] = a;
  for (std::uint32_t a = s; a < t; ++a) raw[a - 1] = a;
  raw[t - 1] = s - 1;
  return Permutation::from_raw_unchecked(std::move(raw));
}

Permutation glue_cycles(const Permutation& p,
                        const std::vector<std::size_t>& cycle_indices) {
  CycleDecomposition d = decompose(p);
  std::set<std::size_t> selected;
  for (std::size_t idx : cycle_indices) {
    if (idx >= d.cycles.size())
      throw BadIndex("cycle index " + std::to_string(idx) + " out of range (" +
                     std::to_string(d.cycles.size()) + " cycles)");
    selected.insert(idx);
  }
  if (selected.size() <= 1) return p;

  // Thread the selected cycles through their minimal points, largest minimum
  // first; rerouting the image of each representative merges them into one
  // cycle and changes nothing else.
  std::vector<std::uint32_t> reps;
  for (auto it = selected.rbegin(); it != selected.rend(); ++it)
    reps.push_back(d.cycles[*it].points.front() - 1);

  std::vector<std::uint32_t> raw(p.raw().begin(), p.raw().end());
  auto original = p.raw();
  for (std::size_t k = 0; k < reps.size(); ++k)
    raw[reps[(k + 1) % reps.size()]] = original[reps[k]];
  return Permutation::from_raw_unchecked(std::move(raw));
}

ApproxConjugacy approximate_conjugator(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("approximate_conjugator: degrees differ");
  const std::uint32_t n = p.degree();

  CycleDecomposition dp = decompose(p);
  CycleDecomposition dq = decompose(q);

  // Group cycle indices by length, keeping canonical order inside a group.
  auto group = [](const CycleDecomposition& d) {
    std::map<std::size_t, std::vector<std::size_t>> g;
    for (std::size_t i = 0; i < d.cycles.size(); ++i)
      g[d.cycles[i].length()].push_back(i);
    return g;
  };
  auto gp = group(dp);
  auto gq = group(dq);

  std::vector<std::uint32_t> raw(n, 0);
  std::vector<bool> p_matched(dp.cycles.size(), false);
  std::vector<bool> q_matched(dq.cycles.size(), false);

  std::uint64_t matched_mass = 0;
  for (const auto& [len, p_idx] : gp) {
    auto it = gq.find(len);
    if (it == gq.end()) continue;
    const auto& q_idx = it->second;
    std::size_t pairs = std::min(p_idx.size(), q_idx.size());
    for (std::size_t k = 0; k < pairs; ++k) {
      const Cycle& cp = dp.cycles[p_idx[k]];
      const Cycle& cq = dq.cycles[q_idx[k]];
      for (std::size_t t = 0; t < len; ++t)
        raw[cp.points[t] - 1] = cq.points[t] - 1;
      p_matched[p_idx[k]] = true;
      q_matched[q_idx[k]] = true;
      matched_mass += len;
    }
  }
  std::size_t fixed_pairs = std::min(dp.fixed_points.size(), dq.fixed_points.size());
  for (std::size_t k = 0; k < fixed_pairs; ++k)
    raw[dp.fixed_points[k] - 1] = dq.fixed_points[k] - 1;
  matched_mass += fixed_pairs;

  // Each side's excess, listed as one glued traversal followed by leftover
  // fixed points; the two lists have equal size and r maps them positionally.
  auto excess_list = [](const Permutation& perm, const CycleDecomposition& d,
                        const std::vector<bool>& matched, std::size_t fixed_used) {
    std::vector<std::size_t> excess_idx;
    for (std::size_t i = 0; i < d.cycles.size(); ++i)
      if (!matched[i]) excess_idx.push_back(i);
    std::vector<std::uint32_t> list;
    if (excess_idx.size() == 1) {
      for (std::uint32_t pt : d.cycles[excess_idx[0]].points) list.push_back(pt - 1);
    } else if (excess_idx.size() > 1) {
      Permutation glued = glue_cycles(perm, excess_idx);
      std::uint32_t start = d.cycles[excess_idx[0]].points.front() - 1;
      auto g = glued.raw();
      std::uint32_t a = start;
      do {
        list.push_back(a);
        a = g[a];
      } while (a != start);
    }
    for (std::size_t k = fixed_used; k < d.fixed_points.size(); ++k)
      list.push_back(d.fixed_points[k] - 1);
    return list;
  };
  auto up = excess_list(p, dp, p_matched, fixed_pairs);
  auto uq = excess_list(q, dq, q_matched, fixed_pairs);
  for (std::size_t k = 0; k < up.size(); ++k) raw[up[k]] = uq[k];

  ApproxConjugacy out{Permutation::from_raw_unchecked(std::move(raw)),
                      Rational(0), n - matched_mass};
  out.defect = hamming(conjugate(p, out.r), q);
  return out;
}

Rational profile_distance(const SoficProfile& a, const SoficProfile& b) {
  Rational worst = Rational::abs(a.inf_mass() - b.inf_mass());
  std::set<std::uint64_t> lengths;
  for (const auto& [len, mass] : a.masses()) lengths.insert(len);
  for (const auto& [len, mass] : b.masses()) lengths.insert(len);
  for (std::uint64_t len : lengths)
    worst = std::max(worst, Rational::abs(a.mass_at(len) - b.mass_at(len)));
  return worst;
}

WitnessReport build_power_class_witness(std::uint32_t n, const Rational& c_p,
                                        const Rational& c_q, std::uint32_t m) {
  if (m < 2) throw RangeError("build_power_class_witness needs m > 1");
  if (c_p <= Rational(0) || c_p > Rational(1) || c_q <= Rational(0) ||
      c_q > Rational(1))
    throw DomainError("normalized lengths must lie in (0, 1]");
  if (c_q > Rational(static_cast<std::int64_t>(m)) * c_p)
    throw InfeasibleTarget("c_q = " + c_q.str() + " exceeds m * c_p = " +
                           (Rational(static_cast<std::int64_t>(m)) * c_p).str());

  const Rational nr(static_cast<std::int64_t>(n));
  std::uint64_t j = static_cast<std::uint64_t>((c_p * nr).floor());
  std::uint64_t r = static_cast<std::uint64_t>((c_q * nr).floor());
  if (j < 1 || r < 1)
    throw DomainError("degree too small for the requested normalized lengths");
  if (r > std::uint64_t(m) * j) ++j;  // floor slack; affordable within +-2

  std::vector<Permutation> parts;
  parts.reserve(m);
  if (r > j) {
    // Staggered copies of one long interval cycle, first anchored at 1 and
    // last ending exactly at r; consecutive offsets never exceed the length.
    std::uint64_t span = r - j - 1;
    for (std::uint32_t t = 0; t < m; ++t) {
      std::uint64_t a = 1 + (std::uint64_t(t) * span) / (m - 1);
      parts.push_back(interval_cycle(static_cast<std::uint32_t>(a),
                                     static_cast<std::uint32_t>(a + j), n));
    }
  } else {
    // One kept cycle of length ~c_q*n plus a tail the last part cancels.
    std::uint64_t tail = j - r;
    if (tail > 0 && tail <= m - 1) {
      r = j;  // tail too short to survive the power; fold it away
      tail = 0;
    }
    Permutation kept = interval_cycle(1, static_cast<std::uint32_t>(r), n);
    Permutation tail_cycle =
        tail > 0 ? interval_cycle(static_cast<std::uint32_t>(r + 1),
                                  static_cast<std::uint32_t>(j), n)
                 : Permutation::identity(n);
    Permutation body = compose(kept, tail_cycle);
    for (std::uint32_t t = 0; t + 1 < m; ++t) parts.push_back(body);
    parts.push_back(compose(
        kept, power(tail_cycle, -static_cast<std::int64_t>(m - 1))));
  }

  Permutation product = Permutation::identity(n);
  for (const auto& part : parts) product = compose(part, product);

  WitnessReport report;
  report.target = SoficProfile::make({{1, Rational(1) - c_q}}, c_q);
  report.achieved = profile_of(product);
  report.defect = profile_distance(report.target, report.achieved);
  report.parts = std::move(parts);
  return report;
}

FactorizationCertificate build_two_class_witness(const Permutation& p,
                                                 const Rational& c1,
                                                 const Rational& c2) {
  const std::uint32_t n = p.degree();
  if (n == 0) throw DomainError("empty permutation");
  if (c2 <= Rational(0) || c1 < c2 || c1 > Rational(1))
    throw DomainError("targets must satisfy 0 < c2 <= c1 <= 1");

  SupportStats st = support_stats(p);
  const Rational nr(static_cast<std::int64_t>(n));
  const Rational m_norm(static_cast<std::int64_t>(st.support),
                        static_cast<std::int64_t>(n));
  const Rational n_norm(static_cast<std::int64_t>(st.cycle_count),
                        static_cast<std::int64_t>(n));
  const Rational slack(3, static_cast<std::int64_t>(n));
  if (m_norm + n_norm > c1 + c2 - slack)
    throw SlackTooSmall("m+n = " + (m_norm + n_norm).str() +
                        " leaves less than 3/n below c1+c2 = " + (c1 + c2).str());
  if (m_norm - n_norm < c1 - c2 + slack)
    throw SlackTooSmall("m-n = " + (m_norm - n_norm).str() +
                        " leaves less than 3/n above c1-c2 = " + (c1 - c2).str());

  std::uint64_t l1 = static_cast<std::uint64_t>((c1 * nr).floor());
  std::uint64_t l2 = static_cast<std::uint64_t>((c2 * nr).floor()) + 2;
  if ((l1 + l2 + st.support + st.cycle_count) % 2 != 0) ++l1;
  while (l1 > n) l1 -= 2;
  while (l2 > n) l2 -= 2;
  if (l2 > l1) std::swap(l1, l2);

  FeasibilityWitness w = feasible(p, static_cast<std::uint32_t>(l1),
                                  static_cast<std::uint32_t>(l2));
  if (!w.ok())
    throw SlackTooSmall(std::string("rounded lengths became infeasible: ") +
                        w.reason_name());
  return factorize(p, static_cast<std::uint32_t>(l1),
                   static_cast<std::uint32_t>(l2));
}

}  // namespace permcalc::witness
