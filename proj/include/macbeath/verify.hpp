#pragma once

// Named verification suites: each runs a family of checks against known
// values and reports expected/actual for every check.

#include <cstdint>
#include <string>
#include <vector>

namespace macbeath::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;
  bool passed() const;
};

struct SuiteOptions {
  int workers = 0;
  std::uint64_t parity_bound = 10000;
  std::uint64_t oracle_bound = 500;
  std::uint64_t route_bound = 500;
  std::uint64_t pattern_bound = 1000000;
};

/// table1, examples, appendix, parity, oracle, patterns.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

SuiteResult table1();
SuiteResult examples();
SuiteResult appendix();
SuiteResult parity(const SuiteOptions& options = {});
/// oracle_matrices followed by oracle_routes.
SuiteResult oracle(const SuiteOptions& options = {});
SuiteResult oracle_matrices(const SuiteOptions& options = {});
SuiteResult oracle_routes(const SuiteOptions& options = {});
SuiteResult patterns(const SuiteOptions& options = {});

}  // namespace macbeath::verify
