#include "permcalc/rational.hpp"

#include <limits>

namespace permcalc {

namespace {

__int128 gcd_i128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::from_i128(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }
  i128 g = gcd_i128(num, den);
  if (g > 1) { num /= g; den /= g; }
  constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi)
    throw Overflow("rational overflow after reduction");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational", 1);
  std::size_t slash = text.find('/');
  auto parse_int = [&](const std::string& part, std::size_t offset) {
    if (part.empty()) throw ParseError("missing integer in rational", offset + 1);
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(part, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + part + "' in rational", offset + 1);
    }
    if (pos != part.size())
      throw ParseError("trailing characters in rational", offset + pos + 1);
    return value;
  };
  if (slash == std::string::npos) return Rational(parse_int(text, 0));
  std::int64_t num = parse_int(text.substr(0, slash), 0);
  std::int64_t den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator in rational", slash + 2);
  return Rational(num, den);
}

}  // namespace permcalc
