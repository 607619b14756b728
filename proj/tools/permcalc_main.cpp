// permcalc: cycle statistics, conjugacy-class predicates, and two-cycle
// factorizations for permutations, with finite-scale witness constructions.
// All output is deterministic for a fixed invocation and seed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "permcalc/errors.hpp"
#include "permcalc/factorization.hpp"
#include "permcalc/serialize.hpp"
#include "permcalc/sofic_profile.hpp"
#include "permcalc/verify.hpp"
#include "permcalc/witness.hpp"

namespace {

using permcalc::Permutation;
using permcalc::Rational;
using permcalc::SoficProfile;
namespace serialize = permcalc::serialize;
using serialize::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw permcalc::UsageError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct PermInputOptions {
  std::string path = "-";
  bool cycles = false;
  std::uint32_t degree = 0;
};

void add_perm_input(CLI::App* cmd, PermInputOptions& opts) {
  cmd->add_option("input", opts.path, "input file, or - for stdin");
  cmd->add_flag("--cycles", opts.cycles,
                "input is in cycle notation (requires --degree)");
  cmd->add_option("--degree", opts.degree, "degree for cycle-notation input");
}

Permutation load_permutation(const PermInputOptions& opts) {
  std::string text = read_input(opts.path);
  if (opts.cycles) {
    if (opts.degree == 0)
      throw permcalc::UsageError("cycle notation requires --degree");
    return permcalc::parse_cycles(text, opts.degree);
  }
  return permcalc::parse_one_line(text);
}

std::string rat_pretty(const Rational& r) { return r.pretty(); }

// Representative profile for scalar (m, n) statistics: mass 2n at length 2
// realizes the cycle count, the rest of the support is long.
SoficProfile profile_from_m_n(const Rational& m, const Rational& n) {
  if (m < Rational(0) || m > Rational(1) || n < Rational(0))
    throw permcalc::DomainError("need 0 <= m <= 1 and n >= 0");
  if (Rational(2) * n > m)
    throw permcalc::DomainError(
        "n <= m/2 is forced (every nontrivial cycle has at least 2 points)");
  return SoficProfile::make({{1, Rational(1) - m}, {2, Rational(2) * n}},
                            m - Rational(2) * n);
}

int run_stats(const PermInputOptions& input, std::uint64_t threshold,
              bool sequence, const std::string& format) {
  if (sequence) {
    std::string text = read_input(input.path);
    permcalc::PermSequence seq;
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        seq.levels.push_back(permcalc::parse_one_line(line));
      } catch (const permcalc::ParseError& e) {
        throw permcalc::ParseError("line " + std::to_string(lineno) + ": " + e.what(),
                                   e.position());
      }
    }
    if (seq.levels.empty()) throw permcalc::ParseError("no permutations in input", 1);
    permcalc::ThresholdRule rule;
    if (threshold > 0) rule = [threshold](std::uint64_t) { return threshold; };
    json report = serialize::sequence_report_json(seq, rule);
    if (format == "structured") {
      std::cout << report.dump(2) << '\n';
    } else {
      for (const auto& level : report["levels"])
        std::cout << "degree " << level["degree"] << " threshold "
                  << level["inf_threshold"] << " inf "
                  << level["profile"]["inf"].get<std::string>() << '\n';
    }
    return 0;
  }

  Permutation p = load_permutation(input);
  std::uint64_t t = threshold > 0 ? threshold
                                  : permcalc::default_inf_threshold(p.degree());
  json record = serialize::perm_stats_record(p, t);
  if (format == "structured") {
    std::cout << record.dump(2) << '\n';
    return 0;
  }
  std::cout << "degree: " << record["degree"] << '\n';
  std::cout << "cycles: " << permcalc::format_cycles(p) << '\n';
  std::cout << "fixed_point_count: " << record["fixed_point_count"] << '\n';
  std::cout << "cyc:";
  for (const auto& [len, mass] : record["cyc"].items())
    std::cout << ' ' << len << ':' << mass;
  std::cout << '\n';
  std::cout << "m: " << record["m"] << '\n';
  std::cout << "n_cycles: " << record["n_cycles"] << '\n';
  std::cout << "hamming_to_id: "
            << Rational::from_string(record["hamming_to_id"].get<std::string>()).pretty()
            << '\n';
  std::cout << "profile (threshold " << t << "):";
  for (const auto& [len, mass] : record["profile"]["masses"].items())
    std::cout << ' ' << len << ':'
              << Rational::from_string(mass.get<std::string>()).pretty();
  std::cout << " inf:"
            << Rational::from_string(record["profile"]["inf"].get<std::string>()).pretty()
            << '\n';
  return 0;
}

int run_factorize(const PermInputOptions& input, std::uint32_t l1,
                  std::uint32_t l2, const std::string& format) {
  Permutation sigma = load_permutation(input);
  permcalc::FeasibilityWitness w = permcalc::feasible(sigma, l1, l2);
  if (!w.ok()) {
    std::cout << "infeasible: " << w.reason_name() << '\n';
    return 3;
  }
  permcalc::FactorizationCertificate cert = permcalc::factorize(sigma, l1, l2);
  if (format == "structured") {
    std::cout << serialize::certificate_json(sigma, cert).dump(2) << '\n';
  } else {
    std::cout << "c1: " << permcalc::format_cycle(cert.c1) << '\n';
    std::cout << "c2: " << permcalc::format_cycle(cert.c2) << '\n';
    bool verified = compose(cert.c1_perm(), cert.c2_perm()) == sigma;
    std::cout << "verified: " << (verified ? "true" : "false") << '\n';
  }
  return 0;
}

void print_verdict(bool verdict, const std::string& lhs, const std::string& rel,
                   const std::string& rhs, const std::string& format) {
  if (format == "structured") {
    json out;
    out["verdict"] = verdict;
    out["lhs"] = lhs;
    out["relation"] = rel;
    out["rhs"] = rhs;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (verdict ? "true" : "false") << ": " << lhs << ' ' << rel << ' '
              << rhs << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation cycle statistics and class-product predicates"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand

  std::string format = "text";
  app.add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "cycle statistics of a permutation");
  PermInputOptions stats_input;
  add_perm_input(stats_cmd, stats_input);
  std::uint64_t stats_threshold = 0;
  bool stats_sequence = false;
  stats_cmd->add_option("--inf-threshold", stats_threshold,
                        "cut for treating cycles as infinite (default ceil(sqrt(n)))");
  stats_cmd->add_flag("--sequence", stats_sequence,
                      "treat input as one permutation per line");

  // factorize
  auto* fact_cmd = app.add_subcommand("factorize",
                                      "write a permutation as a product of two cycles");
  PermInputOptions fact_input;
  add_perm_input(fact_cmd, fact_input);
  std::uint32_t l1 = 0, l2 = 0;
  fact_cmd->add_option("--l1", l1, "length of the first cycle")->required();
  fact_cmd->add_option("--l2", l2, "length of the second cycle")->required();

  // check
  auto* check_cmd = app.add_subcommand("check", "class-product predicates");
  check_cmd->require_subcommand(1);

  auto* icp = check_cmd->add_subcommand("in-class-power",
                                        "q in Cl(p)^m for classes in cyc({1,inf})");
  std::string icp_cp, icp_cq;
  std::uint64_t icp_m = 0;
  icp->add_option("--cp", icp_cp, "inf mass of p, as p/q")->required();
  icp->add_option("--cq", icp_cq, "inf mass of q, as p/q")->required();
  icp->add_option("--m", icp_m, "power m > 1")->required();

  auto* cov = check_cmd->add_subcommand("covers-from",
                                        "Cl(p)^m covers cyc({1,inf})");
  std::string cov_cp;
  std::uint64_t cov_m = 0;
  cov->add_option("--cp", cov_cp, "inf mass of p, as p/q")->required();
  cov->add_option("--m", cov_m, "power m > 1")->required();

  auto* brk = check_cmd->add_subcommand("bracket", "index m with 1/m <= c < 1/(m-1)");
  std::string brk_c;
  brk->add_option("--c", brk_c, "value in (0,1], as p/q")->required();

  auto* two = check_cmd->add_subcommand("two-class",
                                        "p in Cl(q1)Cl(q2) from scalar statistics");
  std::string two_pm, two_pn, two_c1, two_c2;
  two->add_option("--p-m", two_pm, "m(p), as p/q")->required();
  two->add_option("--p-n", two_pn, "n(p), as p/q")->required();
  two->add_option("--c1", two_c1, "inf mass of q1, as p/q")->required();
  two->add_option("--c2", two_c2, "inf mass of q2, as p/q")->required();

  auto* trace = check_cmd->add_subcommand("trace",
                                          "automorphism-image constraint report");
  std::string trace_p, trace_img;
  trace->add_option("--p", trace_p, "profile literal, e.g. 1=1/2,inf=1/2")->required();
  trace->add_option("--img", trace_img, "candidate image profile literal")->required();

  // witness
  auto* wit_cmd = app.add_subcommand("witness", "finite-level witness constructions");
  wit_cmd->require_subcommand(1);

  auto* wpow = wit_cmd->add_subcommand("power-class",
                                       "realize a class as an m-fold class product");
  std::uint32_t wpow_n = 0, wpow_m = 0;
  std::string wpow_cp, wpow_cq;
  bool wpow_omit = false;
  wpow->add_option("--n", wpow_n, "degree")->required();
  wpow->add_option("--cp", wpow_cp, "factor class inf mass, as p/q")->required();
  wpow->add_option("--cq", wpow_cq, "target class inf mass, as p/q")->required();
  wpow->add_option("--m", wpow_m, "number of factors, m > 1")->required();
  wpow->add_flag("--omit-parts", wpow_omit, "do not print the parts");

  auto* wtwo = wit_cmd->add_subcommand("two-class",
                                       "factor a permutation toward target lengths");
  PermInputOptions wtwo_input;
  add_perm_input(wtwo, wtwo_input);
  std::string wtwo_c1, wtwo_c2;
  wtwo->add_option("--c1", wtwo_c1, "normalized first length, as p/q")->required();
  wtwo->add_option("--c2", wtwo_c2, "normalized second length, as p/q")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suites");
  std::string verify_suite = "all";
  permcalc::verify::SuiteOptions suite_opts;
  verify_cmd->add_option("--suite", verify_suite, "suite name or all");
  verify_cmd->add_option("--seed", suite_opts.seed, "random seed");
  verify_cmd->add_option("--max-n", suite_opts.max_n, "override the suite's size");
  verify_cmd->add_option("--budget", suite_opts.budget, "oracle enumeration budget");
  verify_cmd->add_option("--table", suite_opts.table_path,
                         "hkl: write the feasibility table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (stats_cmd->parsed())
      return run_stats(stats_input, stats_threshold, stats_sequence, format);

    if (fact_cmd->parsed()) return run_factorize(fact_input, l1, l2, format);

    if (check_cmd->parsed()) {
      if (icp->parsed()) {
        Rational cp = Rational::from_string(icp_cp);
        Rational cq = Rational::from_string(icp_cq);
        SoficProfile p = SoficProfile::make({{1, Rational(1) - cp}}, cp);
        SoficProfile q = SoficProfile::make({{1, Rational(1) - cq}}, cq);
        bool verdict = permcalc::in_class_power(q, p, icp_m);
        print_verdict(verdict, rat_pretty(cq), "<=",
                      rat_pretty(Rational(static_cast<std::int64_t>(icp_m)) * cp),
                      format);
      } else if (cov->parsed()) {
        Rational cp = Rational::from_string(cov_cp);
        SoficProfile p = SoficProfile::make({{1, Rational(1) - cp}}, cp);
        bool verdict = permcalc::covers_from(p, cov_m);
        print_verdict(verdict, rat_pretty(cp), ">=",
                      rat_pretty(Rational(1, static_cast<std::int64_t>(cov_m))),
                      format);
      } else if (brk->parsed()) {
        std::uint64_t m = permcalc::bracket_index(Rational::from_string(brk_c));
        if (format == "structured") {
          json out;
          out["bracket"] = m;
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << m << '\n';
        }
      } else if (two->parsed()) {
        Rational pm = Rational::from_string(two_pm);
        Rational pn = Rational::from_string(two_pn);
        Rational c1r = Rational::from_string(two_c1);
        Rational c2r = Rational::from_string(two_c2);
        SoficProfile p = profile_from_m_n(pm, pn);
        SoficProfile q1 = SoficProfile::make({{1, Rational(1) - c1r}}, c1r);
        SoficProfile q2 = SoficProfile::make({{1, Rational(1) - c2r}}, c2r);
        bool verdict = permcalc::in_two_class_product(p, q1, q2);
        std::string lhs = rat_pretty(pm + pn) + " <= " + rat_pretty(c1r + c2r);
        std::string rhs = rat_pretty(pm - pn) + " >= " + rat_pretty(c1r - c2r);
        if (format == "structured") {
          json out;
          out["verdict"] = verdict;
          out["sum_condition"] = lhs;
          out["diff_condition"] = rhs;
          std::cout << out.dump(2) << '\n';
        } else {
          std::cout << (verdict ? "true" : "false") << ": " << lhs << " and " << rhs
                    << '\n';
        }
      } else if (trace->parsed()) {
        SoficProfile p = serialize::parse_profile_literal(trace_p);
        SoficProfile img = serialize::parse_profile_literal(trace_img);
        permcalc::TraceReport report = permcalc::trace_constraints(p, img);
        if (format == "structured") {
          std::cout << serialize::trace_report_json(report).dump(2) << '\n';
        } else {
          std::cout << "m+n nonincreasing: "
                    << (report.sum_nonincreasing ? "true" : "false") << '\n';
          std::cout << "m-n nondecreasing: "
                    << (report.diff_nondecreasing ? "true" : "false") << '\n';
          if (report.bracket_applicable)
            std::cout << "bracket equal: "
                      << (report.bracket_equal ? "true" : "false") << '\n';
          std::cout << "all constraints: " << (report.all_hold ? "true" : "false")
                    << '\n';
        }
      }
      return 0;
    }

    if (wit_cmd->parsed()) {
      if (wpow->parsed()) {
        permcalc::witness::WitnessReport report =
            permcalc::witness::build_power_class_witness(
                wpow_n, Rational::from_string(wpow_cp),
                Rational::from_string(wpow_cq), wpow_m);
        std::cout << serialize::witness_report_json(report, !wpow_omit).dump(2)
                  << '\n';
      } else if (wtwo->parsed()) {
        Permutation p = load_permutation(wtwo_input);
        permcalc::FactorizationCertificate cert =
            permcalc::witness::build_two_class_witness(
                p, Rational::from_string(wtwo_c1), Rational::from_string(wtwo_c2));
        std::cout << serialize::certificate_json(p, cert).dump(2) << '\n';
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<std::string> names;
      if (verify_suite == "all")
        names = permcalc::verify::suite_names();
      else
        names.push_back(verify_suite);
      bool all_passed = true;
      for (const auto& name : names) {
        permcalc::verify::SuiteResult r = permcalc::verify::run_suite(name, suite_opts);
        json line;
        line["suite"] = r.name;
        line["criterion"] = r.criterion;
        line["passed"] = r.passed;
        line["checks"] = r.checks;
        line["failures"] = r.failures;
        line["detail"] = r.detail;
        std::cout << line.dump() << '\n';
        all_passed = all_passed && r.passed;
      }
      return all_passed ? 0 : 1;
    }
  } catch (const permcalc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const permcalc::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const permcalc::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 3;
  } catch (const permcalc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
