#include "permcalc/factorization.hpp"

#include <algorithm>
#include <cassert>

namespace permcalc {

const char* FeasibilityWitness::reason_name() const {
  switch (reason) {
    case Reason::parity: return "parity";
    case Reason::range: return "range";
    case Reason::balance: return "balance";
    case Reason::none: return "none";
  }
  return "none";
}

FactorizationCertificate FactorizationCertificate::make(const Permutation& sigma,
                                                        Cycle c1, Cycle c2) {
  FactorizationCertificate cert;
  cert.degree = sigma.degree();
  cert.c1 = std::move(c1);
  cert.c2 = std::move(c2);
  if (cert.c2.length() < 2 || cert.c1.length() < cert.c2.length() ||
      cert.c1.length() > cert.degree)
    throw std::logic_error("certificate lengths out of order");
  if (compose(cert.c1_perm(), cert.c2_perm()) != sigma)
    throw std::logic_error("certificate does not multiply back to the target");
  return cert;
}

FeasibilityWitness feasible(const Permutation& sigma, std::uint32_t l1,
                            std::uint32_t l2) {
  const std::uint32_t n = sigma.degree();
  if (l2 < 2 || l2 > l1 || l1 > n)
    throw LengthOutOfRange("need 2 <= l2 <= l1 <= " + std::to_string(n) +
                           ", got l1=" + std::to_string(l1) +
                           " l2=" + std::to_string(l2));

  CycleDecomposition d = decompose(sigma);
  FeasibilityWitness w;
  w.cycle_count = d.cycles.size();
  w.support = 0;
  for (const auto& c : d.cycles) w.support += c.length();

  // Canonical clause: the requested lengths are exactly sigma's own pair of
  // disjoint cycles. Checked first; it covers pairs the arithmetic
  // conditions cannot (two disjoint cycles force l1+l2 = m+n-2).
  if (d.cycles.size() == 2) {
    std::uint64_t a = d.cycles[0].length();
    std::uint64_t b = d.cycles[1].length();
    if (std::max(a, b) == l1 && std::min(a, b) == l2) {
      w.verdict = FeasibilityWitness::Verdict::feasible_canonical;
      return w;
    }
  }

  const std::uint64_t sum = std::uint64_t(l1) + l2;
  const std::uint64_t base = w.support + w.cycle_count;
  if ((sum + base) % 2 != 0) {
    w.verdict = FeasibilityWitness::Verdict::infeasible;
    w.reason = FeasibilityWitness::Reason::parity;
    return w;
  }
  if (sum < base) {
    w.verdict = FeasibilityWitness::Verdict::infeasible;
    w.reason = FeasibilityWitness::Reason::range;
    return w;
  }
  if (std::uint64_t(l1) - l2 > w.support - w.cycle_count) {
    w.verdict = FeasibilityWitness::Verdict::infeasible;
    w.reason = FeasibilityWitness::Reason::balance;
    return w;
  }
  w.verdict = FeasibilityWitness::Verdict::feasible_parity;
  w.s = (sum - base) / 2;
  return w;
}

namespace {

// Mutable single cycle held as successor/predecessor maps over 0-based
// points, so the factorization moves are O(1) each.
struct CycleEditor {
  std::vector<std::uint32_t> succ, pred;
  std::vector<std::uint8_t> on;
  std::uint64_t len = 0;

  explicit CycleEditor(std::uint32_t n) : succ(n), pred(n), on(n, 0) {}

  void add_singleton(std::uint32_t x) {
    succ[x] = x;
    pred[x] = x;
    on[x] = 1;
    len = 1;
  }

  void insert_after(std::uint32_t z, std::uint32_t x) {
    assert(on[z] && !on[x]);
    std::uint32_t w = succ[z];
    succ[z] = x;
    pred[x] = z;
    succ[x] = w;
    pred[w] = x;
    on[x] = 1;
    ++len;
  }

  void insert_before(std::uint32_t w, std::uint32_t x) {
    insert_after(pred[w], x);
  }

  void excise(std::uint32_t y) {
    assert(on[y] && len >= 2);
    std::uint32_t w = pred[y];
    std::uint32_t v = succ[y];
    succ[w] = v;
    pred[v] = w;
    on[y] = 0;
    --len;
  }

  Cycle to_cycle() const {
    std::uint32_t start = 0;
    while (!on[start]) ++start;
    Cycle c;
    c.points.reserve(len);
    std::uint32_t a = start;
    do {
      c.points.push_back(a + 1);
      a = succ[a];
    } while (a != start);
    return c;
  }
};

// Builds the cycle pair for a target (l1, l2) known to satisfy the
// arithmetic conditions, for non-identity sigma.
//
// The construction starts from the identity sigma = big * junction, where
// the junction cycle threads one representative per nontrivial cycle and
// the big cycle is sigma with the representatives' images rerouted (so it
// runs through the whole support). Three product-preserving local moves,
// each a transposition tau spliced as (big tau)(tau junction), then walk
// the pair to the requested lengths:
//   grow both by one using an unused fixed point,
//   move one point from the big cycle to the small one,
//   grow both by one reusing a point exclusive to the other cycle.
std::pair<Cycle, Cycle> build_pair(const Permutation& sigma, std::uint32_t l1,
                                   std::uint32_t l2) {
  const std::uint32_t n = sigma.degree();
  CycleDecomposition d = decompose(sigma);
  const std::uint64_t support = [&] {
    std::uint64_t m = 0;
    for (const auto& c : d.cycles) m += c.length();
    return m;
  }();
  const std::uint64_t nu = d.cycles.size();
  assert(nu >= 1);

  const std::uint64_t absorbs = (std::uint64_t(l1) + l2 - support - nu) / 2;
  const std::uint64_t rebalances = (support - nu - (std::uint64_t(l1) - l2)) / 2;
  const std::uint64_t fresh_avail = n - support;
  const std::uint64_t fresh_absorbs = std::min(absorbs, fresh_avail);
  const std::uint64_t cross_absorbs = absorbs - fresh_absorbs;
  assert(cross_absorbs <= rebalances);  // guaranteed by l1 <= n

  auto raw = sigma.raw();

  // Junction representatives: the minimum of each nontrivial cycle, threaded
  // in decreasing order of that minimum.
  CycleEditor big(n), small(n);
  for (const auto& c : d.cycles)
    for (std::uint32_t pt : c.points) big.on[pt - 1] = 1;
  for (std::uint32_t a = 0; a < n; ++a)
    if (big.on[a]) big.succ[a] = raw[a];
  big.len = support;

  if (nu == 1) {
    small.add_singleton(d.cycles[0].points.front() - 1);
  } else {
    std::vector<std::uint32_t> reps;
    reps.reserve(nu);
    for (auto it = d.cycles.rbegin(); it != d.cycles.rend(); ++it)
      reps.push_back(it->points.front() - 1);
    for (std::size_t k = 0; k < reps.size(); ++k) {
      std::uint32_t x = reps[k];
      std::uint32_t y = reps[(k + 1) % reps.size()];
      small.succ[x] = y;
      small.pred[y] = x;
      small.on[x] = 1;
    }
    small.len = nu;
    // Reroute the big cycle across the junctions: big(y) = sigma(x) for
    // every junction edge x -> y, which merges the cycles into one.
    for (std::size_t k = 0; k < reps.size(); ++k)
      big.succ[reps[(k + 1) % reps.size()]] = raw[reps[k]];
  }
  for (std::uint32_t a = 0; a < n; ++a)
    if (big.on[a]) big.pred[big.succ[a]] = a;

  const std::uint32_t anchor = d.cycles[0].points.front() - 1;  // shared forever

  // Grow with unused fixed points.
  std::uint32_t next_fixed = 0;
  for (std::uint64_t k = 0; k < fresh_absorbs; ++k) {
    while (big.on[next_fixed] || small.on[next_fixed]) ++next_fixed;
    big.insert_after(anchor, next_fixed);
    small.insert_before(anchor, next_fixed);
  }

  // Rebalance, reusing each freshly exclusive point for a cross-grow while
  // any are still owed.
  std::uint32_t only_cursor = 0;  // big-only points never reappear
  for (std::uint64_t k = 0; k < rebalances; ++k) {
    std::uint32_t w = anchor;
    std::uint64_t steps = 0;
    while (!(small.on[w] && !small.on[big.succ[w]])) {
      w = big.succ[w];
      if (++steps > big.len)
        throw std::logic_error("factorize: no rebalance point found");
    }
    std::uint32_t y = big.succ[w];
    big.excise(y);
    small.insert_before(w, y);

    if (k < cross_absorbs) {
      while (!(big.on[only_cursor] && !small.on[only_cursor])) ++only_cursor;
      std::uint32_t z = only_cursor;
      big.insert_after(z, y);
      small.insert_before(y, z);
    }
  }

  if (big.len != l1 || small.len != l2)
    throw std::logic_error("factorize: constructed lengths drifted");
  return {big.to_cycle(), small.to_cycle()};
}

}  // namespace

FactorizationCertificate factorize(const Permutation& sigma, std::uint32_t l1,
                                   std::uint32_t l2) {
  FeasibilityWitness w = feasible(sigma, l1, l2);
  if (!w.ok())
    throw InfeasibleError(std::string("infeasible: ") + w.reason_name());

  if (w.verdict == FeasibilityWitness::Verdict::feasible_canonical) {
    CycleDecomposition d = decompose(sigma);
    Cycle a = d.cycles[0];
    Cycle b = d.cycles[1];
    if (a.length() < b.length()) std::swap(a, b);
    return FactorizationCertificate::make(sigma, std::move(a), std::move(b));
  }

  if (w.support == 0) {
    // Identity target: an interval cycle times its inverse (l1 == l2 here,
    // forced by the balance condition).
    Cycle c1, c2;
    for (std::uint32_t a = 1; a <= l1; ++a) c1.points.push_back(a);
    c2.points.push_back(1);
    for (std::uint32_t a = l1; a >= 2; --a) c2.points.push_back(a);
    return FactorizationCertificate::make(sigma, std::move(c1), std::move(c2));
  }

  auto [c1, c2] = build_pair(sigma, l1, l2);
  return FactorizationCertificate::make(sigma, std::move(c1), std::move(c2));
}

FactorizationCertificate base_factorization(const Permutation& sigma) {
  CycleDecomposition d = decompose(sigma);
  if (d.cycles.size() < 2)
    throw DomainError("base factorization needs at least two nontrivial cycles");
  std::uint64_t support = 0;
  for (const auto& c : d.cycles) support += c.length();
  auto [c1, c2] = build_pair(sigma, static_cast<std::uint32_t>(support),
                             static_cast<std::uint32_t>(d.cycles.size()));
  return FactorizationCertificate::make(sigma, std::move(c1), std::move(c2));
}

}  // namespace permcalc
