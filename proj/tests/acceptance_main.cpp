// Acceptance suite: one pass/fail line per criterion. Exit 0 only when every
// requested criterion passes.
//
//   acceptance                 run all criteria
//   acceptance --criterion 3   run one
//   acceptance --list          list criteria

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "permcalc/verify.hpp"

int main(int argc, char** argv) {
  using namespace permcalc::verify;

  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--list") == 0) {
      const auto& names = suite_names();
      for (std::size_t k = 0; k < names.size(); ++k)
        std::cout << (k + 1) << "  " << names[k] << "  " << suite_title(names[k])
                  << '\n';
      return 0;
    }
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      wanted.push_back(std::atoi(argv[++i]));
      continue;
    }
    std::cerr << "usage: acceptance [--criterion K] [--list]\n";
    return 2;
  }
  if (wanted.empty())
    for (std::size_t k = 1; k <= suite_names().size(); ++k)
      wanted.push_back(static_cast<int>(k));

  SuiteOptions options;
  bool all_passed = true;
  for (int criterion : wanted) {
    if (criterion < 1 || criterion > static_cast<int>(suite_names().size())) {
      std::cerr << "no criterion " << criterion << '\n';
      return 2;
    }
    const std::string& name = suite_names()[criterion - 1];
    auto start = std::chrono::steady_clock::now();
    SuiteResult r = run_suite(name, options);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::cout << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << criterion
              << " (" << r.name << "): " << suite_title(r.name) << " — "
              << r.checks << " checks"
              << (r.failures ? ", " + std::to_string(r.failures) + " failures" : "")
              << " [" << static_cast<int>(seconds * 1000) << " ms]\n";
    if (!r.passed) std::cout << "       first failure: " << r.detail << '\n';
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 1;
}
