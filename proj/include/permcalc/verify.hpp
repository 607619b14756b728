#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permcalc::verify {

// The acceptance suites. Each suite pins one verification contract with its
// tolerances fixed in code; the CLI `verify` subcommand and the acceptance
// binary are both thin frontends over run_suite.

struct SuiteOptions {
  std::uint64_t seed = 20240901;
  std::uint32_t max_n = 0;      // 0 = suite default
  std::uint64_t budget = 50'000'000;
  std::string table_path;       // hkl only: emit a feasibility table JSON
};

struct SuiteResult {
  std::string name;
  int criterion = 0;
  bool passed = false;
  std::uint64_t checks = 0;   // individual assertions evaluated
  std::uint64_t failures = 0;
  std::string detail;         // first failure, or a summary line
};

/// Suite names in criterion order.
const std::vector<std::string>& suite_names();

/// Short description per suite, for report lines.
std::string suite_title(const std::string& name);

/// Runs one suite; throws UsageError for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace permcalc::verify
