#include "permcalc/serialize.hpp"

#include <set>

namespace permcalc::serialize {

json perm_stats_record(const Permutation& p, std::uint64_t inf_threshold) {
  CycleDecomposition d = decompose(p);
  CycleType t = cycle_type(p);
  SupportStats st = support_stats(p);

  json cycles = json::array();
  for (const auto& c : d.cycles) cycles.push_back(c.points);
  json cyc = json::object();
  for (const auto& [len, mass] : t.masses) cyc[std::to_string(len)] = mass;

  json out;
  out["degree"] = p.degree();
  out["cycles"] = std::move(cycles);
  out["fixed_point_count"] = d.fixed_points.size();
  out["cyc"] = std::move(cyc);
  out["m"] = st.support;
  out["n_cycles"] = st.cycle_count;
  out["hamming_to_id"] = hamming(p, Permutation::identity(p.degree())).str();
  out["inf_threshold"] = inf_threshold;
  out["profile"] = profile_json(profile_of(p, inf_threshold));
  return out;
}

json cycle_type_json(const CycleType& t) {
  json masses = json::object();
  for (const auto& [len, mass] : t.masses) masses[std::to_string(len)] = mass;
  json out;
  out["degree"] = t.degree;
  out["masses"] = std::move(masses);
  return out;
}

json profile_json(const SoficProfile& p) {
  json masses = json::object();
  for (const auto& [len, mass] : p.masses())
    masses[std::to_string(len)] = mass.str();
  json out;
  out["masses"] = std::move(masses);
  out["inf"] = p.inf_mass().str();
  return out;
}

SoficProfile profile_from_json(const json& j) {
  std::map<std::uint64_t, Rational> masses;
  if (j.contains("masses"))
    for (const auto& [key, value] : j.at("masses").items())
      masses[std::stoull(key)] = Rational::from_string(value.get<std::string>());
  Rational inf(0);
  if (j.contains("inf")) inf = Rational::from_string(j.at("inf").get<std::string>());
  return SoficProfile::make(std::move(masses), inf);
}

SoficProfile parse_profile_literal(const std::string& text) {
  std::map<std::uint64_t, Rational> masses;
  Rational inf(0);
  bool have_inf = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string entry = text.substr(pos, comma - pos);
    std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw ParseError("profile entry '" + entry + "' has no '='", pos + 1);
    std::string key = entry.substr(0, eq);
    Rational value = Rational::from_string(entry.substr(eq + 1));
    if (key == "inf") {
      if (have_inf) throw ParseError("duplicate inf entry", pos + 1);
      inf = value;
      have_inf = true;
    } else {
      std::uint64_t len = 0;
      try {
        len = std::stoull(key);
      } catch (const std::exception&) {
        throw ParseError("bad length '" + key + "'", pos + 1);
      }
      if (masses.count(len))
        throw ParseError("duplicate length " + key, pos + 1);
      masses[len] = value;
    }
    pos = comma + 1;
  }
  if (!have_inf) {
    Rational sum(0);
    for (const auto& [len, mass] : masses) sum += mass;
    inf = Rational(1) - sum;
  }
  return SoficProfile::make(std::move(masses), inf);
}

json certificate_json(const Permutation& sigma, const FactorizationCertificate& c) {
  json out;
  out["sigma"] = format_one_line(sigma);
  out["c1"] = c.c1.points;
  out["c2"] = c.c2.points;
  out["l1"] = c.c1.length();
  out["l2"] = c.c2.length();
  out["verified"] = (compose(c.c1_perm(), c.c2_perm()) == sigma);
  return out;
}

json witness_report_json(const witness::WitnessReport& r, bool include_parts) {
  json out;
  out["target"] = profile_json(r.target);
  out["achieved"] = profile_json(r.achieved);
  out["defect"] = r.defect.str();
  if (include_parts) {
    json parts = json::array();
    for (const auto& p : r.parts) parts.push_back(format_one_line(p));
    out["parts"] = std::move(parts);
  }
  return out;
}

json perm_sequence_json(const PermSequence& s) {
  json out = json::array();
  for (const auto& p : s.levels) {
    json level;
    level["degree"] = p.degree();
    level["one_line"] = format_one_line(p);
    out.push_back(std::move(level));
  }
  return out;
}

json sequence_report_json(const PermSequence& s, const ThresholdRule& rule) {
  std::vector<SoficProfile> profiles = sequence_stats(s, rule);
  json levels = json::array();
  std::set<std::uint64_t> lengths;
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    std::uint64_t degree = s.levels[k].degree();
    json level;
    level["degree"] = degree;
    level["inf_threshold"] = rule ? rule(degree) : default_inf_threshold(degree);
    level["profile"] = profile_json(profiles[k]);
    levels.push_back(std::move(level));
    for (const auto& [len, mass] : profiles[k].masses()) lengths.insert(len);
  }
  json trajectories = json::object();
  for (std::uint64_t len : lengths) {
    json track = json::array();
    for (const auto& prof : profiles) track.push_back(prof.mass_at(len).str());
    trajectories[std::to_string(len)] = std::move(track);
  }
  json inf_track = json::array();
  for (const auto& prof : profiles) inf_track.push_back(prof.inf_mass().str());
  trajectories["inf"] = std::move(inf_track);

  json out;
  out["levels"] = std::move(levels);
  out["trajectories"] = std::move(trajectories);
  return out;
}

json trace_report_json(const TraceReport& r) {
  json out;
  out["m_before"] = r.m_before.str();
  out["n_before"] = r.n_before.str();
  out["m_after"] = r.m_after.str();
  out["n_after"] = r.n_after.str();
  out["sum_nonincreasing"] = r.sum_nonincreasing;
  out["diff_nondecreasing"] = r.diff_nondecreasing;
  out["bracket_applicable"] = r.bracket_applicable;
  if (r.bracket_applicable) {
    out["bracket_before"] = r.bracket_before;
    out["bracket_after"] = r.bracket_after;
    out["bracket_equal"] = r.bracket_equal;
  }
  out["n_nonincreasing_implied"] = r.n_nonincreasing_implied;
  out["all_hold"] = r.all_hold;
  return out;
}

}  // namespace permcalc::serialize
