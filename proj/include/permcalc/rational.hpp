#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "permcalc/errors.hpp"

namespace permcalc {

/// Exact rational number on 64-bit words.
///
/// Every predicate in this library compares rationals exactly; half-open
/// interval boundaries make floating point unusable. Intermediates are
/// computed in 128 bits and an Overflow error is thrown if a reduced
/// result no longer fits, rather than silently wrapping.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  static Rational of(std::int64_t num, std::int64_t den) { return Rational(num, den); }

  /// Accepts "p/q" or a bare integer "p".
  static Rational from_string(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  /// Canonical "p/q" form, denominator always present ("3/1", "0/1").
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Human form: omits the denominator when it is 1.
  std::string pretty() const {
    return den_ == 1 ? std::to_string(num_) : str();
  }

  /// Largest integer <= num/den.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  /// Smallest integer >= num/den.
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return from_i128(-i128(num_), den_); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  static Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

private:
  using i128 = __int128;

  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    num_ = num;
    den_ = den;
  }

  static Rational from_i128(i128 num, i128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace permcalc
