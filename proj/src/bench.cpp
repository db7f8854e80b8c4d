#include "redkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>

#include "redkit/errors.hpp"
#include "redkit/oracles.hpp"
#include "redkit/random.hpp"

namespace redkit {

namespace {

volatile uint64_t timing_sink = 0;

double elapsed_running(const std::function<uint64_t()>& work, int reps) {
  auto start = std::chrono::steady_clock::now();
  uint64_t acc = 0;
  for (int r = 0; r < reps; ++r) acc ^= work();
  auto stop = std::chrono::steady_clock::now();
  timing_sink ^= acc;
  return std::chrono::duration<double>(stop - start).count();
}

// Per-call seconds: repetitions grow until one batch crosses 15 ms, and the
// reported value is the median of three batches at that repetition count.
double measure_seconds(const std::function<uint64_t()>& work) {
  int reps = 1;
  double t = elapsed_running(work, reps);
  while (t < 0.015 && reps < (1 << 24)) {
    reps *= 2;
    t = elapsed_running(work, reps);
  }
  double a = t / reps;
  double b = elapsed_running(work, reps) / reps;
  double c = elapsed_running(work, reps) / reps;
  double lo = std::min({a, b, c});
  double hi = std::max({a, b, c});
  return a + b + c - lo - hi;
}

void fit_line(BenchResult& result) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = int(result.points.size());
  for (const BenchPoint& pt : result.points) {
    double x = pt.x;
    double y = std::log2(pt.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  if (n < 2 || denom == 0) {
    result.slope = 0;
    result.intercept = n ? sy / n : 0;
    return;
  }
  result.slope = (n * sxy - sx * sy) / denom;
  result.intercept = (sy - result.slope * sx) / n;
}

}  // namespace

const std::vector<std::string>& bench_targets() {
  static const std::vector<std::string> names = {"setcover-dp", "cnf-brute",
                                                 "subsetsum-dp"};
  return names;
}

BenchResult run_bench(const std::string& target, int lo, int hi, uint64_t seed) {
  BenchResult result;
  result.target = target;
  result.seed = seed;

  if (target == "setcover-dp" || target == "cnf-brute") {
    if (lo == 0 && hi == 0) lo = 10, hi = 20;
    if (lo < 1 || hi < lo) throw ParameterError("bad bench range");
    result.x_label = "n";
    Rng rng(seed);
    for (int n = lo; n <= hi; ++n) {
      uint64_t sub = rng.next();
      std::function<uint64_t()> work;
      if (target == "setcover-dp") {
        // Dense family: all singletons plus a few wider sets. Every mask is
        // then reachable, so the table sweep does uniform work per mask and
        // the measured cost tracks 2^n instead of the sparse-instance floor.
        Rng sub_rng(sub);
        std::vector<Bits> sets;
        for (int e = 0; e < n; ++e) sets.push_back(Bits::of(n, {e}));
        std::set<Bits> extras;
        while (int(extras.size()) < 4) {
          Bits b(n);
          int size = 2 + int(sub_rng.coin());
          while (b.count() < size) b.set(sub_rng.below(n));
          extras.insert(b);
        }
        sets.insert(sets.end(), extras.begin(), extras.end());
        SetSystem sys = make_set_system(n, std::move(sets));
        work = [sys]() {
          auto mn = min_set_cover_dp(sys, 30);
          return mn ? uint64_t(*mn) : 0;
        };
      } else {
        CnfFormula f = random_cnf(n, 12, 3, sub);
        work = [f]() { return count_satisfying(f, 30).get_ui(); };
      }
      result.points.push_back({n, measure_seconds(work)});
    }
  } else if (target == "subsetsum-dp") {
    if (lo == 0 && hi == 0) lo = 14, hi = 22;
    if (lo < 4 || hi < lo || hi > 30) throw ParameterError("bad bench range");
    result.x_label = "log2(t)";
    Rng rng(seed);
    for (int e = lo; e <= hi; ++e) {
      long long t = 1LL << e;
      std::vector<mpz_class> items;
      for (int i = 0; i < 24; ++i)
        items.push_back(mpz_class(long(1 + rng.next() % uint64_t(t / 2))));
      SubsetSumInstance inst = make_subset_sum(std::move(items), mpz_class(long(t)));
      std::function<uint64_t()> work = [inst]() {
        return subset_sum_decide(inst, SubsetSumMode::dp, 64, 1LL << 31) ? 1 : 0;
      };
      result.points.push_back({e, measure_seconds(work)});
    }
  } else {
    throw ParameterError("unknown bench target: " + target);
  }

  fit_line(result);
  return result;
}

}  // namespace redkit
