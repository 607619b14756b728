#include "permcalc/sofic_profile.hpp"

#include <numeric>

namespace permcalc {

SoficProfile SoficProfile::make(std::map<std::uint64_t, Rational> masses,
                                Rational inf_mass) {
  Rational total = inf_mass;
  if (inf_mass.is_negative())
    throw DomainError("profile inf mass is negative");
  for (auto it = masses.begin(); it != masses.end();) {
    if (it->first == 0) throw DomainError("profile mass at length 0");
    if (it->second.is_negative())
      throw DomainError("profile mass at length " + std::to_string(it->first) +
                        " is negative");
    if (it->second.is_zero()) {
      it = masses.erase(it);
      continue;
    }
    total += it->second;
    ++it;
  }
  if (total != Rational(1))
    throw DomainError("profile masses sum to " + total.str() + ", expected 1");
  SoficProfile p;
  p.masses_ = std::move(masses);
  p.inf_mass_ = inf_mass;
  return p;
}

SoficProfile SoficProfile::identity_profile() {
  return make({{1, Rational(1)}}, Rational(0));
}

SoficProfile SoficProfile::full_inf_profile() {
  return make({}, Rational(1));
}

Rational SoficProfile::m_value() const { return Rational(1) - mass_at(1); }

Rational SoficProfile::n_value() const {
  Rational total(0);
  for (const auto& [len, mass] : masses_)
    if (len >= 2) total += mass / Rational(static_cast<std::int64_t>(len));
  return total;
}

std::uint64_t default_inf_threshold(std::uint64_t degree) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= degree) ++r;  // isqrt
  return r * r == degree ? r : r + 1;
}

SoficProfile profile_of(const Permutation& p, std::uint64_t inf_threshold) {
  if (inf_threshold < 1) throw RangeError("inf threshold must be positive");
  if (p.degree() == 0) throw DomainError("profile of the empty permutation");
  const std::int64_t n = p.degree();
  CycleType t = cycle_type(p);
  std::map<std::uint64_t, Rational> masses;
  std::uint64_t inf_points = 0;
  for (const auto& [len, mass] : t.masses) {
    if (len < inf_threshold)
      masses[len] = Rational(static_cast<std::int64_t>(mass), n);
    else
      inf_points += mass;
  }
  return SoficProfile::make(std::move(masses),
                            Rational(static_cast<std::int64_t>(inf_points), n));
}

SoficProfile profile_of(const Permutation& p) {
  return profile_of(p, default_inf_threshold(p.degree()));
}

std::vector<SoficProfile> sequence_stats(const PermSequence& s,
                                         const ThresholdRule& rule) {
  for (std::size_t k = 1; k < s.levels.size(); ++k)
    if (s.levels[k].degree() < s.levels[k - 1].degree())
      throw DomainError("sequence degrees must be nondecreasing");
  std::vector<SoficProfile> out;
  out.reserve(s.levels.size());
  for (const auto& p : s.levels) {
    std::uint64_t threshold =
        rule ? rule(p.degree()) : default_inf_threshold(p.degree());
    out.push_back(profile_of(p, threshold));
  }
  return out;
}

bool conjugate_equiv(const SoficProfile& a, const SoficProfile& b) {
  return a.masses() == b.masses();
}

bool in_cyc_1_inf(const SoficProfile& p) {
  for (const auto& [len, mass] : p.masses())
    if (len >= 2 && !mass.is_zero()) return false;
  return true;
}

SoficProfile power_profile(const SoficProfile& p, std::uint64_t m) {
  if (m < 1) throw RangeError("power exponent must be positive");
  std::map<std::uint64_t, Rational> masses;
  for (const auto& [len, mass] : p.masses()) {
    auto target = len / std::gcd(len, m);
    auto [it, inserted] = masses.emplace(target, mass);
    if (!inserted) it->second += mass;
  }
  return SoficProfile::make(std::move(masses), p.inf_mass());
}

bool powers_stay_in_class(const SoficProfile& p) {
  std::uint64_t max_len = 1;
  for (const auto& [len, mass] : p.masses())
    if (!mass.is_zero()) max_len = std::max(max_len, len);
  for (std::uint64_t m = 2; m <= max_len; ++m)
    if (!conjugate_equiv(power_profile(p, m), p)) return false;
  return true;
}

namespace {

void require_cyc_1_inf(const SoficProfile& p, const char* role) {
  if (!in_cyc_1_inf(p))
    throw DomainError(std::string(role) + " profile is outside cyc({1,inf})");
}

}  // namespace

bool in_class_power(const SoficProfile& q, const SoficProfile& p,
                    std::uint64_t m) {
  if (m < 2) throw RangeError("in_class_power needs m > 1");
  require_cyc_1_inf(p, "base");
  require_cyc_1_inf(q, "target");
  return q.inf_mass() <= Rational(static_cast<std::int64_t>(m)) * p.inf_mass();
}

bool covers_from(const SoficProfile& p, std::uint64_t m) {
  if (m < 2) throw RangeError("covers_from needs m > 1");
  require_cyc_1_inf(p, "base");
  return p.inf_mass() >= Rational(1, static_cast<std::int64_t>(m));
}

std::uint64_t bracket_index(const Rational& c) {
  if (c <= Rational(0) || c > Rational(1))
    throw DomainError("bracket_index needs 0 < c <= 1, got " + c.str());
  // 1/m <= c < 1/(m-1)  <=>  m = ceil(1/c).
  return static_cast<std::uint64_t>((Rational(1) / c).ceil());
}

bool in_two_class_product(const SoficProfile& p, const SoficProfile& q1,
                          const SoficProfile& q2) {
  require_cyc_1_inf(q1, "first factor");
  require_cyc_1_inf(q2, "second factor");
  if (q2.inf_mass() <= Rational(0))
    throw DomainError("second factor needs positive inf mass");
  if (q1.inf_mass() < q2.inf_mass())
    throw DomainError("factors must satisfy q1.inf >= q2.inf");
  Rational m = p.m_value();
  Rational n = p.n_value();
  return m + n <= q1.inf_mass() + q2.inf_mass() &&
         m - n >= q1.inf_mass() - q2.inf_mass();
}

TraceReport trace_constraints(const SoficProfile& p, const SoficProfile& image) {
  TraceReport r;
  r.m_before = p.m_value();
  r.n_before = p.n_value();
  r.m_after = image.m_value();
  r.n_after = image.n_value();
  r.sum_nonincreasing = r.m_after + r.n_after <= r.m_before + r.n_before;
  r.diff_nondecreasing = r.m_after - r.n_after >= r.m_before - r.n_before;
  r.bracket_applicable = in_cyc_1_inf(p) && in_cyc_1_inf(image);
  if (r.bracket_applicable) {
    bool zero_before = p.inf_mass().is_zero();
    bool zero_after = image.inf_mass().is_zero();
    if (!zero_before) r.bracket_before = bracket_index(p.inf_mass());
    if (!zero_after) r.bracket_after = bracket_index(image.inf_mass());
    r.bracket_equal = (zero_before == zero_after) &&
                      (zero_before || r.bracket_before == r.bracket_after);
  }
  r.n_nonincreasing_implied = r.sum_nonincreasing && r.diff_nondecreasing;
  r.all_hold = r.sum_nonincreasing && r.diff_nondecreasing &&
               (!r.bracket_applicable || r.bracket_equal);
  return r;
}

}  // namespace permcalc
