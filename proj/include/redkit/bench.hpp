#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace redkit {

struct BenchPoint {
  int x = 0;           // swept size parameter (n, or log2 of the target)
  double seconds = 0;  // median-of-3 adaptive timing, construction excluded
};

struct BenchResult {
  std::string target;
  std::string x_label;
  uint64_t seed = 0;
  std::vector<BenchPoint> points;
  double slope = 0.0;      // least-squares slope of log2(seconds) vs x
  double intercept = 0.0;
};

// Registered targets: setcover-dp, cnf-brute, subsetsum-dp.
const std::vector<std::string>& bench_targets();

// Sweeps x = lo..hi (pass 0,0 for the target's default range).
BenchResult run_bench(const std::string& target, int lo, int hi, uint64_t seed);

}  // namespace redkit
