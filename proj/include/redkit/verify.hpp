#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "redkit/oracles.hpp"

namespace redkit {

// One record per checked case; detail is empty when the case passed.
struct CaseRecord {
  int id = 0;
  bool passed = true;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  uint64_t seed = 0;
  int cases = 0;
  int failures = 0;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // published time budget for the default corpus
  std::vector<CaseRecord> records;

  bool passed() const { return failures == 0; }
};

struct SuiteOptions {
  uint64_t seed = 1;
  int cases = 0;           // 0 = suite default
  std::vector<int> sizes;  // overrides the suite's n-list where one exists
  int cap = kDefaultCap;
};

// Registered suites, in report order. Each drives one reduction/algorithm
// contract over seeded random instances against the brute-force oracles.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts = {});

}  // namespace redkit
