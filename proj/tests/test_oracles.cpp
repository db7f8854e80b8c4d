#include "doctest.h"

#include <gmpxx.h>

#include <vector>

#include "redkit/errors.hpp"
#include "redkit/instances.hpp"
#include "redkit/oracles.hpp"
#include "redkit/random.hpp"

using namespace redkit;

namespace {

CnfFormula cnf(int n, std::vector<Clause> cs) { return make_cnf(n, std::move(cs)); }

SetSystem sys(int n, std::vector<std::vector<int>> sets, bool multiset = false) {
  return make_set_system(n, sets, multiset);
}

}  // namespace

TEST_CASE("count satisfying assignments") {
  CHECK(count_satisfying(cnf(3, {})) == 8);
  CHECK(count_satisfying(cnf(2, {{{0, true}}, {{0, false}}})) == 0);
  CHECK(count_satisfying(cnf(3, {{{0, true}, {1, true}, {2, true}}})) == 7);
  CHECK(count_satisfying(cnf(0, {})) == 1);
  CHECK(count_satisfying(cnf(2, {{}})) == 0);  // an empty clause kills everything
  CHECK_THROWS_AS(count_satisfying(cnf(30, {})), CapacityError);
}

TEST_CASE("hitting set counts by size") {
  SizeIndexedCounts none = count_hitting_sets_by_size(sys(2, {}));
  CHECK(none.get(0) == 1);
  CHECK(none.get(1) == 2);
  CHECK(none.get(2) == 1);
  CHECK(none.total() == 4);

  SizeIndexedCounts both = count_hitting_sets_by_size(sys(2, {{0}, {1}}));
  CHECK(both.get(2) == 1);
  CHECK(both.total() == 1);
  CHECK(both.min_nonzero() == 2);

  // An empty set can never be hit.
  CHECK(count_hitting_sets_by_size(sys(2, {{}})).total() == 0);

  // Inclusion-exclusion over subfamilies gives an independent total.
  SetSystem r = random_set_system(8, 5, 3, 99);
  mpz_class non_hitting = 0;
  for (int mask = 1; mask < (1 << r.num_sets()); ++mask) {
    Bits u(r.universe_size);
    int bits = 0;
    for (int i = 0; i < r.num_sets(); ++i)
      if (mask >> i & 1) {
        u |= r.sets[i];
        ++bits;
      }
    mpz_class term = mpz_class(1) << (r.universe_size - u.count());
    non_hitting += (bits % 2 ? term : -term);
  }
  mpz_class expected = (mpz_class(1) << r.universe_size) - non_hitting;
  CHECK(count_hitting_sets_by_size(r).total() == expected);

  CHECK_THROWS_AS(count_hitting_sets_by_size(sys(2, {}), 1), CapacityError);
}

TEST_CASE("set cover counts by size") {
  SizeIndexedCounts c = count_set_covers_by_size(sys(2, {{0}, {1}, {0, 1}}));
  CHECK(c.get(1) == 1);
  CHECK(c.get(2) == 3);
  CHECK(c.get(3) == 1);
  CHECK(c.total() == 5);

  // The empty universe is covered by the empty subfamily alone.
  SizeIndexedCounts trivial = count_set_covers_by_size(sys(0, {}));
  CHECK(trivial.get(0) == 1);
  CHECK(trivial.total() == 1);

  // Uncoverable universe: zero everywhere.
  CHECK(count_set_covers_by_size(sys(2, {{0}})).total() == 0);

  // Multiset copies are counted with multiplicity.
  SizeIndexedCounts multi = count_set_covers_by_size(sys(1, {{0}, {0}}, true));
  CHECK(multi.get(1) == 2);
  CHECK(multi.get(2) == 1);

  CHECK_THROWS_AS(
      count_set_covers_by_size(sys(2, {{0}, {1}, {0, 1}}), 2), CapacityError);
}

TEST_CASE("minimum set cover dp") {
  CHECK(min_set_cover_dp(sys(2, {{0}, {1}, {0, 1}})) == 1);
  CHECK_FALSE(min_set_cover_dp(sys(2, {{0}})).has_value());
  CHECK(min_set_cover_dp(sys(4, {{0}, {1}, {2}, {3}})) == 4);
  CHECK(min_set_cover_dp(sys(0, {})) == 0);

  for (uint64_t seed = 1; seed <= 20; ++seed) {
    SetSystem r = random_set_system(6, 1 + int(seed % 8), 3, seed);
    auto dp = min_set_cover_dp(r);
    auto counts = count_set_covers_by_size(r);
    CHECK(dp == counts.min_nonzero());
  }
}

TEST_CASE("not-all-equal assignments") {
  CHECK(count_nae_assignments(cnf(1, {{{0, true}}})) == 0);
  CHECK(count_nae_assignments(cnf(2, {{{0, true}, {1, true}}})) == 2);
  CHECK(count_nae_assignments(cnf(2, {})) == 4);
  CHECK_FALSE(exists_nae_assignment(cnf(1, {{{0, true}}})));
  CHECK(exists_nae_assignment(cnf(2, {{{0, true}, {1, true}}})));

  // NAE truth is complementation-closed, so every count is even.
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    mpz_class c = count_nae_assignments(random_cnf(5, 6, 3, seed));
    CHECK(c % 2 == 0);
  }
}

TEST_CASE("set splittings") {
  CHECK(count_set_splittings(sys(2, {{0, 1}})) == 2);
  CHECK(count_set_splittings(sys(1, {{0}})) == 0);
  CHECK(count_set_splittings(sys(2, {})) == 4);

  // Splitting by X equals not-all-equal satisfaction of the monotone formula
  // with one clause per set, so counts agree set for set.
  SetSystem r = random_set_system(6, 5, 3, 17);
  std::vector<Clause> clauses;
  for (const Bits& s : r.sets) {
    Clause c;
    for (int e : s.elements()) c.push_back(Lit{e, true});
    clauses.push_back(std::move(c));
  }
  CHECK(count_set_splittings(r) ==
        count_nae_assignments(make_cnf(r.universe_size, clauses)));
}

TEST_CASE("bipartite independent sets") {
  Graph empty = make_graph(0, {}, std::nullopt, 0);
  CHECK(count_bipartite_independent_sets(empty) == 1);

  Graph edge = make_graph(2, {{0, 1}}, std::nullopt, 1);
  CHECK(count_bipartite_independent_sets(edge) == 3);
  CHECK(parity_bipartite_independent_sets(edge) == 1);

  Graph k22 = make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, std::nullopt, 2);
  CHECK(count_bipartite_independent_sets(k22) == 7);
  CHECK(parity_bipartite_independent_sets(k22) == 1);

  // A graph without a declared bipartition is outside this oracle's domain.
  CHECK_THROWS_AS(count_bipartite_independent_sets(make_graph(2, {{0, 1}})),
                  ParameterError);

  // Brute-force cross-check over all vertex subsets.
  Graph r = random_bipartite_graph(4, 4, 0.4, 23);
  auto adj = r.adjacency();
  mpz_class brute = 0;
  for (int x = 0; x < (1 << r.num_vertices); ++x) {
    bool ok = true;
    for (auto [u, v] : r.edges)
      if ((x >> u & 1) && (x >> v & 1)) {
        ok = false;
        break;
      }
    if (ok) ++brute;
  }
  CHECK(count_bipartite_independent_sets(r) == brute);
}

TEST_CASE("steiner-connected subsets by size") {
  Graph path = make_graph(3, {{0, 1}, {1, 2}}, Bits::of(3, {0, 2}));
  SizeIndexedCounts c = count_steiner_sets_by_size(path);
  CHECK(c.get(3) == 1);
  CHECK(c.total() == 1);

  // No terminals: every connected subset qualifies, including the empty one.
  SizeIndexedCounts free = count_steiner_sets_by_size(make_graph(3, {{0, 1}, {1, 2}}, Bits(3)));
  CHECK(free.get(0) == 1);
  CHECK(free.get(1) == 3);
  CHECK(free.get(2) == 2);
  CHECK(free.get(3) == 1);

  Graph tri = make_graph(3, {{0, 1}, {0, 2}, {1, 2}}, Bits::of(3, {0}));
  SizeIndexedCounts t = count_steiner_sets_by_size(tri);
  CHECK(t.get(1) == 1);
  CHECK(t.get(2) == 2);
  CHECK(t.get(3) == 1);

  CHECK_THROWS_AS(count_steiner_sets_by_size(make_graph(2, {{0, 1}})), ParameterError);
}

TEST_CASE("connected vertex covers by size") {
  SizeIndexedCounts edge = count_cvc_by_size(make_graph(2, {{0, 1}}));
  CHECK(edge.get(1) == 2);
  CHECK(edge.get(2) == 1);

  SizeIndexedCounts path = count_cvc_by_size(make_graph(3, {{0, 1}, {1, 2}}));
  CHECK(path.get(1) == 1);
  CHECK(path.get(2) == 2);
  CHECK(path.get(3) == 1);

  // With no edges every connected subset is a cover: empty set and singletons.
  SizeIndexedCounts none = count_cvc_by_size(make_graph(2, {}));
  CHECK(none.get(0) == 1);
  CHECK(none.get(1) == 2);
  CHECK(none.get(2) == 0);
}

TEST_CASE("set partitionings by size") {
  SizeIndexedCounts p = count_set_partitionings_by_size(sys(2, {{0}, {1}, {0, 1}}));
  CHECK(p.get(1) == 1);
  CHECK(p.get(2) == 1);
  CHECK(p.total() == 2);

  CHECK(count_set_partitionings_by_size(sys(2, {{0, 1}})).get(1) == 1);

  SizeIndexedCounts q = count_set_partitionings_by_size(sys(2, {{0}, {0, 1}}));
  CHECK(q.get(1) == 1);
  CHECK(q.total() == 1);  // {0} with {0,1} overlaps, so no 2-set partitioning

  CHECK(count_set_partitionings_by_size(sys(0, {})).get(0) == 1);
}

TEST_CASE("subset sum decision") {
  SubsetSumInstance yes = make_subset_sum({3, 5, 7}, 12);
  CHECK(subset_sum_decide(yes, SubsetSumMode::dp));
  CHECK(subset_sum_decide(yes, SubsetSumMode::brute));

  SubsetSumInstance no = make_subset_sum({2, 4}, 5);
  CHECK_FALSE(subset_sum_decide(no, SubsetSumMode::dp));
  CHECK_FALSE(subset_sum_decide(no, SubsetSumMode::brute));

  CHECK(subset_sum_decide(make_subset_sum({}, 0), SubsetSumMode::dp));
  CHECK_FALSE(subset_sum_decide(make_subset_sum({}, 1), SubsetSumMode::brute));

  for (uint64_t seed = 1; seed <= 25; ++seed) {
    SubsetSumInstance r = random_subset_sum(9, 10, seed);
    CHECK(subset_sum_decide(r, SubsetSumMode::dp) ==
          subset_sum_decide(r, SubsetSumMode::brute));
  }

  // The DP refuses targets beyond its table cap instead of truncating.
  CHECK_THROWS_AS(
      subset_sum_decide(make_subset_sum({mpz_class(1) << 40}, mpz_class(1) << 40),
                        SubsetSumMode::dp),
      CapacityError);
}

TEST_CASE("circuit satisfying assignments") {
  VspCircuit and_gate = make_circuit(
      {{GateKind::input, {}}, {GateKind::input, {}}, {GateKind::and_gate, {0, 1}}}, 2);
  CHECK(circuit_count_sat(and_gate) == 1);

  VspCircuit tautology = make_circuit(
      {{GateKind::input, {}}, {GateKind::not_gate, {0}}, {GateKind::or_gate, {0, 1}}}, 2);
  CHECK(circuit_count_sat(tautology) == 2);

  VspCircuit wire = make_circuit({{GateKind::input, {}}}, 0);
  CHECK(circuit_count_sat(wire) == 1);
}
