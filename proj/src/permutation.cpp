#include "permcalc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "permcalc/kernels.hpp"
#include "permcalc/rng.hpp"

namespace permcalc {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q,
                         const char* op) {
  if (p.degree() != q.degree())
    throw DegreeMismatch(std::string(op) + ": degrees " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()) + " differ");
}

}  // namespace

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> raw(degree);
  std::iota(raw.begin(), raw.end(), 0u);
  return Permutation(std::move(raw));
}

Permutation Permutation::from_one_line(const std::vector<std::uint32_t>& images) {
  const std::uint32_t n = static_cast<std::uint32_t>(images.size());
  std::vector<std::uint32_t> raw(n);
  std::vector<bool> seen(n, false);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t v = images[i];
    if (v < 1 || v > n)
      throw DomainError("image " + std::to_string(v) + " out of range 1.." +
                        std::to_string(n));
    if (seen[v - 1])
      throw DomainError("duplicate image " + std::to_string(v));
    seen[v - 1] = true;
    raw[i] = v - 1;
  }
  return Permutation(std::move(raw));
}

Permutation Permutation::from_cycles(
    std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> raw(degree);
  std::iota(raw.begin(), raw.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::uint32_t pt : cycle) {
      if (pt < 1 || pt > degree)
        throw DomainError("cycle point " + std::to_string(pt) +
                          " out of range 1.." + std::to_string(degree));
      if (used[pt - 1])
        throw DomainError("point " + std::to_string(pt) +
                          " appears in more than one cycle");
      used[pt - 1] = true;
    }
    if (cycle.size() < 2) continue;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::uint32_t from = cycle[k] - 1;
      std::uint32_t to = cycle[(k + 1) % cycle.size()] - 1;
      raw[from] = to;
    }
  }
  return Permutation(std::move(raw));
}

Permutation Permutation::from_raw_unchecked(std::vector<std::uint32_t> raw) {
  return Permutation(std::move(raw));
}

bool Permutation::is_identity() const {
  return kernels::count_fixed(img_) == img_.size();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "compose");
  std::vector<std::uint32_t> raw(p.degree());
  kernels::compose_into(raw, p.raw(), q.raw());
  return Permutation::from_raw_unchecked(std::move(raw));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> raw(p.degree());
  auto img = p.raw();
  for (std::uint32_t i = 0; i < p.degree(); ++i) raw[img[i]] = i;
  return Permutation::from_raw_unchecked(std::move(raw));
}

Permutation power(const Permutation& p, std::int64_t m) {
  const std::uint32_t n = p.degree();
  auto img = p.raw();
  std::vector<std::uint32_t> raw(n);
  std::vector<std::uint32_t> cycle;
  std::vector<bool> visited(n, false);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    cycle.clear();
    for (std::uint32_t a = start; !visited[a]; a = img[a]) {
      visited[a] = true;
      cycle.push_back(a);
    }
    const std::int64_t len = static_cast<std::int64_t>(cycle.size());
    const std::size_t shift = static_cast<std::size_t>(((m % len) + len) % len);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      raw[cycle[k]] = cycle[(k + shift) % cycle.size()];
  }
  return Permutation::from_raw_unchecked(std::move(raw));
}

Permutation conjugate(const Permutation& p, const Permutation& r) {
  require_same_degree(p, r, "conjugate");
  // result(r(a)) = r(p(a)) pointwise; no inverse materialized.
  std::vector<std::uint32_t> raw(p.degree());
  auto pi = p.raw();
  auto ri = r.raw();
  for (std::uint32_t a = 0; a < p.degree(); ++a) raw[ri[a]] = ri[pi[a]];
  return Permutation::from_raw_unchecked(std::move(raw));
}

Permutation conjugator(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "conjugator");
  CycleDecomposition dp = decompose(p);
  CycleDecomposition dq = decompose(q);
  if (dp.cycles.size() != dq.cycles.size() ||
      dp.fixed_points.size() != dq.fixed_points.size())
    throw CycleTypeMismatch("conjugator: cycle types differ");

  // Canonical order groups equal lengths together once sorted by length;
  // pair the i-th cycle of each length on both sides.
  auto by_length = [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.points.front() < b.points.front();
  };
  std::vector<const Cycle*> cp, cq;
  for (const auto& c : dp.cycles) cp.push_back(&c);
  for (const auto& c : dq.cycles) cq.push_back(&c);
  std::sort(cp.begin(), cp.end(), [&](auto* a, auto* b) { return by_length(*a, *b); });
  std::sort(cq.begin(), cq.end(), [&](auto* a, auto* b) { return by_length(*a, *b); });

  std::vector<std::uint32_t> raw(p.degree());
  for (std::size_t i = 0; i < cp.size(); ++i) {
    if (cp[i]->length() != cq[i]->length())
      throw CycleTypeMismatch("conjugator: cycle types differ");
    for (std::size_t k = 0; k < cp[i]->length(); ++k)
      raw[cp[i]->points[k] - 1] = cq[i]->points[k] - 1;
  }
  for (std::size_t i = 0; i < dp.fixed_points.size(); ++i)
    raw[dp.fixed_points[i] - 1] = dq.fixed_points[i] - 1;
  return Permutation::from_raw_unchecked(std::move(raw));
}

Rational hamming(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "hamming");
  if (p.degree() == 0) return Rational(0);
  auto diff = kernels::count_diff(p.raw(), q.raw());
  return Rational(static_cast<std::int64_t>(diff),
                  static_cast<std::int64_t>(p.degree()));
}

SupportStats support_stats(const Permutation& p) {
  SupportStats s;
  auto img = p.raw();
  const std::uint32_t n = p.degree();
  std::size_t fixed = kernels::count_fixed(img);
  s.support = n - fixed;
  std::vector<bool> visited(n, false);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (visited[start] || img[start] == start) continue;
    ++s.cycle_count;
    for (std::uint32_t a = start; !visited[a]; a = img[a]) visited[a] = true;
  }
  return s;
}

CycleDecomposition decompose(const Permutation& p) {
  CycleDecomposition d;
  d.degree = p.degree();
  auto img = p.raw();
  std::vector<bool> visited(p.degree(), false);
  // Scanning upward means every unvisited point is the minimum of its
  // cycle, so cycles come out rotated and sorted canonically for free.
  for (std::uint32_t start = 0; start < p.degree(); ++start) {
    if (visited[start]) continue;
    if (img[start] == start) {
      d.fixed_points.push_back(start + 1);
      visited[start] = true;
      continue;
    }
    Cycle c;
    for (std::uint32_t a = start; !visited[a]; a = img[a]) {
      visited[a] = true;
      c.points.push_back(a + 1);
    }
    d.cycles.push_back(std::move(c));
  }
  return d;
}

Permutation recompose(const CycleDecomposition& d) {
  std::vector<std::vector<std::uint32_t>> cycles;
  cycles.reserve(d.cycles.size());
  for (const auto& c : d.cycles) cycles.push_back(c.points);
  return Permutation::from_cycles(d.degree, cycles);
}

Permutation cycle_as_perm(const Cycle& c, std::uint32_t degree) {
  return Permutation::from_cycles(degree, {c.points});
}

Permutation parse_one_line(const std::string& text) {
  std::vector<std::uint32_t> images;
  std::vector<std::size_t> token_at;  // character offset per token
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    std::size_t start = i;
    std::uint64_t value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (value > 0xffffffffull)
        throw ParseError("value too large", start + 1);
      ++i;
    }
    if (i == start)
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i + 1);
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i + 1);
    images.push_back(static_cast<std::uint32_t>(value));
    token_at.push_back(start + 1);
  }
  if (images.empty()) throw ParseError("empty permutation", 1);
  const std::uint32_t n = static_cast<std::uint32_t>(images.size());
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < images.size(); ++k) {
    std::uint32_t v = images[k];
    if (v < 1 || v > n)
      throw ParseError("image " + std::to_string(v) + " out of range 1.." +
                       std::to_string(n) + " (token " + std::to_string(k + 1) + ")",
                       token_at[k]);
    if (seen[v - 1])
      throw ParseError("duplicate image " + std::to_string(v) + " (token " +
                       std::to_string(k + 1) + ")", token_at[k]);
    seen[v - 1] = true;
  }
  return Permutation::from_one_line(images);
}

Permutation parse_cycles(const std::string& text, std::uint32_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty cycle expression", 1);
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '('", i + 1);
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (i == text.size()) throw ParseError("unterminated cycle", i + 1);
      if (text[i] == ')') { ++i; break; }
      std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 0xffffffffull) throw ParseError("value too large", start + 1);
        ++i;
      }
      if (i == start)
        throw ParseError(std::string("unexpected character '") + text[i] + "'", i + 1);
      if (value < 1 || value > degree)
        throw ParseError("point " + std::to_string(value) + " out of range 1.." +
                         std::to_string(degree), start + 1);
      if (used[value - 1])
        throw ParseError("point " + std::to_string(value) + " repeated", start + 1);
      used[value - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string format_one_line(const Permutation& p) {
  std::string out;
  for (std::uint32_t a = 1; a <= p.degree(); ++a) {
    if (a > 1) out += ' ';
    out += std::to_string(p.image(a));
  }
  return out;
}

std::string format_cycle(const Cycle& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(c.points[k]);
  }
  out += ')';
  return out;
}

std::string format_cycles(const Permutation& p) {
  CycleDecomposition d = decompose(p);
  if (d.cycles.empty()) return "()";
  std::string out;
  for (const auto& c : d.cycles) out += format_cycle(c);
  return out;
}

Permutation random_permutation(std::uint32_t degree, Rng& rng) {
  std::vector<std::uint32_t> raw(degree);
  std::iota(raw.begin(), raw.end(), 0u);
  for (std::uint32_t i = degree; i > 1; --i) {
    std::uint32_t j = static_cast<std::uint32_t>(rng.below(i));
    std::swap(raw[i - 1], raw[j]);
  }
  return Permutation::from_raw_unchecked(std::move(raw));
}

}  // namespace permcalc
