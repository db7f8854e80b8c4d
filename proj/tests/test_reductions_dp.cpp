#include "doctest.h"

#include <gmpxx.h>

#include <vector>

#include "redkit/errors.hpp"
#include "redkit/instances.hpp"
#include "redkit/oracles.hpp"
#include "redkit/parity_math.hpp"
#include "redkit/random.hpp"
#include "redkit/reductions_dp.hpp"

using namespace redkit;

namespace {

SetSystem sys(int n, std::vector<std::vector<int>> sets, bool multiset = false) {
  return make_set_system(n, sets, multiset);
}

int brute_cover_parity(const GroupedCoverInstance& g) {
  mpz_class c = count_set_covers_by_size(g.system, 26).get(g.target);
  return mpz_odd_p(c.get_mpz_t()) ? 1 : 0;
}

// Minimum number of sets partitioning the universe, by subset DP.
std::optional<int> min_partitioning(const SetSystem& s) {
  int n = s.universe_size;
  constexpr int kInf = 1 << 30;
  std::vector<int> dp(size_t(1) << n, kInf);
  dp[0] = 0;
  uint64_t full = (n == 64) ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  for (uint64_t mask = 0; mask <= full; ++mask) {
    if (dp[mask] == kInf) continue;
    for (const Bits& b : s.sets) {
      uint64_t sm = b.low_word();
      if (sm == 0 || (mask & sm)) continue;  // disjointness is mandatory
      uint64_t nm = mask | sm;
      if (dp[nm] > dp[mask] + 1) dp[nm] = dp[mask] + 1;
    }
    if (mask == full) break;
  }
  if (dp[full] == kInf) return std::nullopt;
  return dp[full];
}

}  // namespace

TEST_CASE("incidence graph layout") {
  SetSystem s = sys(2, {{0}, {0, 1}});
  Graph g = incidence_bipartite_graph(s);
  CHECK(g.num_vertices == 4);  // 2 sets then 2 elements
  CHECK(g.bipartition_a == 2);
  // Set 0 = {0}, set 1 = {0,1}; element e sits at vertex 2 + e.
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {1, 3}});
}

TEST_CASE("hitting, cover, and independent-set parities coincide") {
  FlipParities one = flip_parities(sys(1, {{0}}));
  CHECK(one.parity_hitting == 1);
  CHECK(one.parity_covers == 1);
  CHECK(one.parity_is == 1);
  // The incidence graph here is a single edge: 3 independent sets.
  CHECK(count_bipartite_independent_sets(incidence_bipartite_graph(sys(1, {{0}}))) == 3);

  FlipParities empty = flip_parities(sys(0, {}));
  CHECK(empty.parity_hitting == 1);
  CHECK(empty.parity_covers == 1);
  CHECK(empty.parity_is == 1);

  for (uint64_t seed = 1; seed <= 12; ++seed) {
    SetSystem s = random_set_system(6, 1 + int(seed % 6), 3, seed);
    FlipParities f = flip_parities(s);
    CHECK(f.parity_hitting == f.parity_covers);
    CHECK(f.parity_covers == f.parity_is);
    CHECK(f.parity_hitting == count_hitting_sets_by_size(s).parity_total());
  }
}

TEST_CASE("grouping set cover keeps the decision and shrinks the target") {
  SetSystem singles = sys(4, {{0}, {1}, {2}, {3}});
  GroupedCoverInstance g = group_set_cover(singles, 4, 0.5);
  CHECK(g.q == 2);
  CHECK(g.target == 2);
  CHECK(g.system.num_sets() == 6);  // all pairs of the four singletons
  CHECK(g.system.universe_size == 4);
  for (const Bits& b : g.system.sets) CHECK(b.count() == 2);
  CHECK(min_set_cover_dp(g.system).value() <= g.target);

  // Provenance names q input sets whose union reproduces each output set.
  for (const auto& [idx, srcs] : g.provenance) {
    REQUIRE(srcs.size() == 2);
    Bits u(4);
    for (int s0 : srcs) u |= singles.sets[s0].widened(4);
    CHECK(u == g.system.sets[idx]);
  }

  // Fewer sets than the group size: forced singletons make grouping possible.
  GroupedCoverInstance padded = group_set_cover(sys(2, {{0, 1}}), 2, 0.5);
  CHECK(padded.q == 2);
  CHECK(min_set_cover_dp(padded.system).has_value());
  CHECK(min_set_cover_dp(padded.system).value() <= padded.target);

  // NO instances stay NO.
  GroupedCoverInstance no = group_set_cover(sys(2, {{0}}), 1, 0.5);
  auto mc = min_set_cover_dp(no.system);
  CHECK((!mc.has_value() || mc.value() > no.target));

  CHECK_THROWS_AS(group_set_cover(singles, 4, 0.0), ParameterError);
  CHECK_THROWS_AS(group_set_cover(singles, -1, 0.5), ParameterError);
  CHECK_THROWS_AS(group_set_cover(singles, 5, 0.5), ParameterError);

  for (uint64_t seed = 1; seed <= 10; ++seed) {
    SetSystem s = random_set_system(6, 4, 3, seed);
    for (int t = 0; t <= 4; ++t) {
      GroupedCoverInstance out = group_set_cover(s, t, 0.5);
      auto in_min = min_set_cover_dp(s);
      auto out_min = min_set_cover_dp(out.system);
      bool in_yes = in_min.has_value() && *in_min <= t;
      bool out_yes = out_min.has_value() && *out_min <= out.target;
      CHECK(in_yes == out_yes);
      CHECK(out.target <= 0.5 * out.system.universe_size + 1e-9);
    }
  }
}

TEST_CASE("fiber parity coefficients") {
  // At j = q * t_star the only covering family is the canonical one.
  for (int q : {1, 2, 4})
    for (int t = 0; t <= 5; ++t) CHECK(dj_coefficient(q * t, q, t) == 1);
  CHECK(dj_coefficient(0, 1, 0) == 1);
  // q = 1: covering [j] with exactly t distinct singletons forces t = j.
  for (int j = 0; j <= 6; ++j)
    for (int t = 0; t <= 6; ++t)
      CHECK(dj_coefficient(j, 1, t) == (j == t ? 1 : 0));

  // Direct fiber enumeration: families of exactly t distinct q-subsets of [j]
  // whose union is all of [j].
  for (int q : {1, 2})
    for (int j = 0; j <= 5; ++j)
      for (int t = 0; t <= 4; ++t) {
        std::vector<uint64_t> subs;
        for (uint64_t x = 0; x < (uint64_t(1) << j); ++x)
          if (__builtin_popcountll(x) == q) subs.push_back(x);
        long long fibers = 0;
        uint64_t full = (uint64_t(1) << j) - 1;
        int ns = int(subs.size());
        if (t == 0) {
          fibers = (j == 0) ? 1 : 0;
        } else if (t <= ns) {
          std::vector<int> pick(t);
          auto rec = [&](auto&& self, int at, int lo) -> void {
            if (at == t) {
              uint64_t u = 0;
              for (int idx : pick) u |= subs[idx];
              if (u == full) ++fibers;
              return;
            }
            for (int i = lo; i < ns; ++i) {
              pick[at] = i;
              self(self, at + 1, i + 1);
            }
          };
          rec(rec, 0, 0);
        }
        CHECK(dj_coefficient(j, q, t) == int(fibers % 2));
      }

  CHECK_THROWS_AS(dj_coefficient(-1, 1, 0), ParameterError);
  CHECK_THROWS_AS(dj_coefficient(1, 0, 0), ParameterError);
}

TEST_CASE("parity pipeline recovers the cover-count parity") {
  SetSystem s = sys(2, {{0}, {1}, {0, 1}});
  ParityLedger ledger;
  CHECK(parity_cover_pipeline(s, 2.0, brute_cover_parity, &ledger) == 1);  // 5 covers
  // The ledger records per-size parities of the input instance: 1, 3, 1 covers.
  CHECK(ledger.s.at(1) == 1);
  CHECK(ledger.s.at(2) == 1);
  CHECK(ledger.s.at(3) == 1);

  CHECK(parity_cover_pipeline(sys(2, {{0}}), 2.0, brute_cover_parity) == 0);
  CHECK(parity_cover_pipeline(sys(0, {}), 1.0, brute_cover_parity) == 1);

  CHECK_THROWS_AS(
      parity_cover_pipeline(sys(2, {{0}, {0}}, true), 2.0, brute_cover_parity),
      ParameterError);
  CHECK_THROWS_AS(parity_cover_pipeline(s, 0.0, brute_cover_parity), ParameterError);
  // Density bound: m <= c * n when a bound is declared.
  CHECK_THROWS_AS(parity_cover_pipeline(s, 2.0, brute_cover_parity, nullptr, 1.0),
                  ParameterError);

  // Small universes take the direct-enumeration path.
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    SetSystem r = random_set_system(4, 1 + int(seed % 6), 3, seed);
    int want = count_set_covers_by_size(r).parity_total();
    CHECK(parity_cover_pipeline(r, 0.5, brute_cover_parity) == want);
  }
  // Larger universes run the grouped recurrence.
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    SetSystem r = random_set_system(6, 1 + int(seed % 3), 3, seed);
    int want = count_set_covers_by_size(r).parity_total();
    CHECK(parity_cover_pipeline(r, 0.5, brute_cover_parity) == want);
  }
}

TEST_CASE("set cover to steiner tree") {
  SteinerReduction one = set_cover_to_steiner(sys(1, {{0}}), 1);
  CHECK(one.graph.num_vertices == 4);  // set, element, hub, pendant
  CHECK(one.target == 4);
  CHECK(one.steiner_size(1) == 4);
  CHECK_FALSE(one.trivially_no);
  REQUIRE(one.graph.terminals.has_value());
  CHECK(one.graph.terminals->elements() == std::vector<int>{1, 3});
  CHECK(count_steiner_sets_by_size(one.graph).get(4) == 1);

  SetSystem s = sys(2, {{0}, {1}, {0, 1}});
  SteinerReduction red = set_cover_to_steiner(s, 2);
  auto covers = count_set_covers_by_size(s);
  auto steiner = count_steiner_sets_by_size(red.graph);
  for (int i = 0; i <= s.num_sets(); ++i)
    CHECK(steiner.get(red.steiner_size(i)) == covers.get(i));

  CHECK(set_cover_to_steiner(sys(1, {}), 0).trivially_no);
  CHECK_THROWS_AS(set_cover_to_steiner(s, -1), ParameterError);
}

TEST_CASE("set cover to connected vertex cover") {
  SetSystem s = sys(2, {{0}, {1}, {0, 1}});
  CvcReduction red = set_cover_to_cvc(s, 2);
  CHECK(red.universe == 2);
  CHECK(red.target == 5);  // t + |U| + 1
  CHECK_FALSE(red.trivially_no);

  // c_j = sum_i s_i * C(|U|+1, j - i - |U| - 1) at every size.
  auto covers = count_set_covers_by_size(s);
  auto cvc = count_cvc_by_size(red.graph);
  int vmax = red.graph.num_vertices;
  for (int j = 0; j <= vmax; ++j) {
    mpz_class expect = 0;
    for (int i = 1; i <= s.num_sets(); ++i) {
      int d = j - i - red.universe - 1;
      if (d < 0 || d > red.universe + 1) continue;
      expect += covers.get(i) * big_binom(red.universe + 1, d);
    }
    CHECK(cvc.get(j) == expect);
  }

  // Parity recovery off the real outputs: s parities are (1, 1, 1) here.
  SizeIndexedCounts c_par;
  for (int j = 0; j <= vmax; ++j) c_par.add(j, cvc.get(j) % 2);
  SizeIndexedCounts rec = cvc_parity_recover(c_par, red.universe, 3, vmax);
  CHECK(rec.get(1) == 1);
  CHECK(rec.get(2) == 1);
  CHECK(rec.get(3) == 1);

  // All-zero counts recover all-zero parities.
  SizeIndexedCounts zeros;
  SizeIndexedCounts rec0 = cvc_parity_recover(zeros, 2, 3, 20);
  for (int i = 1; i <= 3; ++i) CHECK(rec0.get(i) == 0);

  CHECK_THROWS_AS(cvc_parity_recover(zeros, 2, 3, 5), ParameterError);
  CHECK(set_cover_to_cvc(sys(1, {}), 0).trivially_no);
  CHECK_THROWS_AS(set_cover_to_cvc(s, -1), ParameterError);
}

TEST_CASE("set cover to set partitioning closes under subsets") {
  PartitioningReduction split = set_cover_to_set_partitioning(sys(2, {{0, 1}}), 1);
  CHECK(split.system.num_sets() == 3);  // {0}, {1}, {0,1}
  CHECK(split.target == 1);
  CHECK(min_partitioning(split.system) == 1);

  PartitioningReduction same = set_cover_to_set_partitioning(sys(2, {{0}, {1}}), 2);
  CHECK(same.system.num_sets() == 2);  // singleton subsets add nothing new

  for (uint64_t seed = 1; seed <= 10; ++seed) {
    SetSystem s = random_set_system(6, 4, 3, seed);
    for (int t = 1; t <= 4; ++t) {
      PartitioningReduction out = set_cover_to_set_partitioning(s, t);
      auto mc = min_set_cover_dp(s);
      auto mp = min_partitioning(out.system);
      bool cover_yes = mc.has_value() && *mc <= t;
      bool part_yes = mp.has_value() && *mp <= out.target;
      CHECK(cover_yes == part_yes);
    }
  }
}

TEST_CASE("set partitioning to subset sum") {
  SetSystem two = sys(2, {{0}, {1}});
  SubsetSumInstance both = set_partitioning_to_subset_sum(two, 2);
  CHECK(both.num_items() == 2);
  CHECK(subset_sum_decide(both, SubsetSumMode::dp));
  CHECK(subset_sum_decide(both, SubsetSumMode::brute));
  CHECK_FALSE(subset_sum_decide(set_partitioning_to_subset_sum(two, 1), SubsetSumMode::dp));

  // Overlapping sets cannot both be chosen: the indicator field overflows
  // into the padding only if sets overlap, which the layout rules out.
  SubsetSumInstance overlap = set_partitioning_to_subset_sum(sys(2, {{0}, {0, 1}}), 2);
  CHECK_FALSE(subset_sum_decide(overlap, SubsetSumMode::brute));

  CHECK(subset_sum_decide(set_partitioning_to_subset_sum(sys(2, {{0, 1}}), 1),
                          SubsetSumMode::dp));

  std::vector<SubsetSumInstance> all =
      set_partitioning_to_subset_sum_all(sys(2, {{0}, {1}, {0, 1}}), 2);
  REQUIRE(all.size() == 2);
  CHECK(subset_sum_decide(all[0], SubsetSumMode::brute));  // t0 = 1 via {0,1}
  CHECK(subset_sum_decide(all[1], SubsetSumMode::brute));  // t0 = 2 via {0} + {1}
  CHECK(set_partitioning_to_subset_sum_all(sys(2, {{0}, {1}, {0, 1}}), 1).size() == 1);

  CHECK_THROWS_AS(set_partitioning_to_subset_sum(two, 0), ParameterError);
  CHECK_THROWS_AS(set_partitioning_to_subset_sum_all(two, 0), ParameterError);

  for (uint64_t seed = 1; seed <= 10; ++seed) {
    SetSystem s = random_set_system(6, 5, 3, seed);
    auto parts = count_set_partitionings_by_size(s);
    for (int t0 = 1; t0 <= 4; ++t0) {
      bool want = parts.get(t0) > 0;
      SubsetSumInstance inst = set_partitioning_to_subset_sum(s, t0);
      CHECK(subset_sum_decide(inst, SubsetSumMode::dp) == want);
      CHECK(subset_sum_decide(inst, SubsetSumMode::brute) == want);
    }
  }
}
