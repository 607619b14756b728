#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permcalc/errors.hpp"
#include "permcalc/rational.hpp"

namespace permcalc {

/// A bijection of {1..n}. Points are 1-based in the public API and in all
/// text formats; the backing array is 0-based so the flat kernels can run
/// on it directly. Immutable once built; operations return new values.
class Permutation {
public:
  /// Identity of the given degree.
  static Permutation identity(std::uint32_t degree);

  /// From 1-based images, e.g. {2,3,1} for the 3-cycle. Validates bijectivity.
  static Permutation from_one_line(const std::vector<std::uint32_t>& images);

  /// From 1-based cycles; unlisted points are fixed. Singleton cycles allowed
  /// (no-ops). Validates that listed points are in range and distinct.
  static Permutation from_cycles(std::uint32_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  /// Takes ownership of a 0-based image array without validation.
  /// The caller asserts the array is a bijection of {0..n-1}.
  static Permutation from_raw_unchecked(std::vector<std::uint32_t> raw);

  Permutation() = default;

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }

  /// Image of a 1-based point.
  std::uint32_t image(std::uint32_t point) const { return img_[point - 1] + 1; }

  /// 0-based image array.
  std::span<const std::uint32_t> raw() const { return img_; }

  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }

private:
  explicit Permutation(std::vector<std::uint32_t> raw) : img_(std::move(raw)) {}

  std::vector<std::uint32_t> img_;
};

/// A cycle (a_1 a_2 ... a_k): each point maps to the next, the last to the
/// first. Points are 1-based, pairwise distinct, and in canonical form the
/// list starts at its minimum.
struct Cycle {
  std::vector<std::uint32_t> points;

  std::size_t length() const { return points.size(); }
};

/// Canonical disjoint-cycle form: cycles of length >= 2 rotated to start at
/// their minimum and sorted by that minimum; fixed points kept as a sorted
/// list, never as 1-cycles.
struct CycleDecomposition {
  std::uint32_t degree = 0;
  std::vector<Cycle> cycles;
  std::vector<std::uint32_t> fixed_points;
};

/// compose(p, q)(a) = p(q(a)); the right factor acts first. This convention
/// is fixed across the whole library, including the factorization oracle.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// p^m for any integer m (negative powers via the inverse). O(n) via cycle
/// walks, so huge exponents are fine.
Permutation power(const Permutation& p, std::int64_t m);

/// r p r^-1. Preserves the cycle type.
Permutation conjugate(const Permutation& p, const Permutation& r);

/// Some r with r p r^-1 == q, built by aligning same-length cycles in
/// canonical order. Throws CycleTypeMismatch when no such r exists.
Permutation conjugator(const Permutation& p, const Permutation& q);

/// Normalized Hamming distance |{a : p(a) != q(a)}| / n, exact.
Rational hamming(const Permutation& p, const Permutation& q);

/// Support size m = n - #fixed and the number of nontrivial cycles.
struct SupportStats {
  std::uint64_t support = 0;
  std::uint64_t cycle_count = 0;
};
SupportStats support_stats(const Permutation& p);

CycleDecomposition decompose(const Permutation& p);

/// Rebuild a permutation from a decomposition (inverse of decompose).
Permutation recompose(const CycleDecomposition& d);

Permutation cycle_as_perm(const Cycle& c, std::uint32_t degree);

// Text formats. One-line: "2 3 1" (degree = token count). Cycles:
// "(1 3)(2 5)" with the degree supplied separately; "()" is the identity.
Permutation parse_one_line(const std::string& text);
Permutation parse_cycles(const std::string& text, std::uint32_t degree);
std::string format_one_line(const Permutation& p);
std::string format_cycles(const Permutation& p);
std::string format_cycle(const Cycle& c);

/// Uniform random permutation of the given degree (Fisher-Yates).
class Rng;
Permutation random_permutation(std::uint32_t degree, Rng& rng);

}  // namespace permcalc
