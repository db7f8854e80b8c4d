#include "redkit/random.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "redkit/errors.hpp"

namespace redkit {

int Rng::below(int bound) {
  if (bound <= 0) throw ParameterError("Rng::below requires a positive bound");
  return int(next() % uint64_t(bound));
}

bool Rng::chance(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  double u = double(next() >> 11) * 0x1p-53;
  return u < p;
}

CnfFormula random_cnf(int n, int m, int k, uint64_t seed) {
  if (n < 1 || m < 1 || k < 1) throw ParameterError("random_cnf requires n, m, k >= 1");
  if (k > n) throw ParameterError("clause width bound exceeds variable count");
  Rng rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (int c = 0; c < m; ++c) {
    int size = 1 + rng.below(k);
    std::set<int> vars;
    while (int(vars.size()) < size) vars.insert(rng.below(n));
    Clause clause;
    for (int v : vars) clause.push_back(Lit{v, rng.coin()});
    clauses.push_back(std::move(clause));
  }
  return make_cnf(n, std::move(clauses));
}

SetSystem random_set_system(int n, int m, int k, uint64_t seed) {
  if (n < 1 || m < 1 || k < 1)
    throw ParameterError("random_set_system requires n, m, k >= 1");
  if (k > n) throw ParameterError("set size bound exceeds universe size");
  mpz_class feasible = 0;
  for (int s = 1; s <= k; ++s) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, s);
    feasible += b;
  }
  if (feasible < m)
    throw ParameterError("fewer than m distinct nonempty sets of size <= k exist");
  Rng rng(seed);
  std::set<Bits> sets;
  long long attempts = 0, limit = 10000 + 200LL * m;
  while (int(sets.size()) < m) {
    if (++attempts > limit)
      throw ParameterError("could not sample enough distinct sets; lower m or raise k");
    int size = 1 + rng.below(k);
    std::set<int> elems;
    while (int(elems.size()) < size) elems.insert(rng.below(n));
    Bits b(n);
    for (int e : elems) b.set(e);
    sets.insert(b);
  }
  return make_set_system(n, std::vector<Bits>(sets.begin(), sets.end()));
}

Graph random_graph(int n, int num_edges, uint64_t seed) {
  if (n < 1 || num_edges < 0) throw ParameterError("random_graph requires n >= 1");
  long long max_edges = (long long)n * (n - 1) / 2;
  if (num_edges > max_edges) throw ParameterError("more edges requested than pairs exist");
  Rng rng(seed);
  std::set<std::pair<int, int>> edges;
  while (int(edges.size()) < num_edges) {
    int u = rng.below(n), v = rng.below(n);
    if (u == v) continue;
    edges.insert(std::minmax(u, v));
  }
  return make_graph(n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

Graph random_bipartite_graph(int a, int b, double p, uint64_t seed) {
  if (a < 0 || b < 0) throw ParameterError("negative side size");
  if (p < 0.0 || p > 1.0) throw ParameterError("edge probability outside [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (rng.chance(p)) edges.emplace_back(u, a + v);
  return make_graph(a + b, std::move(edges), std::nullopt, a);
}

SubsetSumInstance random_subset_sum(int n, int bits, uint64_t seed) {
  if (n < 1 || bits < 1 || bits > 62)
    throw ParameterError("random_subset_sum requires n >= 1 and bits in [1, 62]");
  Rng rng(seed);
  std::vector<mpz_class> items;
  items.reserve(n);
  uint64_t span = (uint64_t(1) << bits) - 1;
  for (int i = 0; i < n; ++i)
    items.push_back(mpz_class(uint64_t(1) + rng.next() % span));
  mpz_class target = 0;
  for (int i = 0; i < n; ++i)
    if (rng.coin()) target += items[i];
  if (rng.below(4) == 0) ++target;  // occasionally land off any subset sum
  return make_subset_sum(std::move(items), std::move(target));
}

VspCircuit random_circuit(int n_inputs, int n_gates, uint64_t seed, bool with_labels) {
  if (n_inputs < 1 || n_gates < 1)
    throw ParameterError("random_circuit requires n_inputs, n_gates >= 1");
  Rng rng(seed);
  std::vector<Gate> gates;
  for (int i = 0; i < n_inputs; ++i) gates.push_back(Gate{GateKind::input, {}});
  for (int g = 0; g < n_gates; ++g) {
    int idx = int(gates.size());
    int kind = rng.below(3);
    Gate gate;
    if (kind == 2) {
      gate.kind = GateKind::not_gate;
      gate.in = {rng.below(idx)};
    } else {
      gate.kind = kind == 0 ? GateKind::and_gate : GateKind::or_gate;
      gate.in = {rng.below(idx), rng.below(idx)};
    }
    gates.push_back(std::move(gate));
  }
  int output = int(gates.size()) - 1;
  std::optional<std::vector<long long>> labels;
  if (with_labels) {
    labels.emplace();
    for (size_t i = 0; i < gates.size(); ++i) labels->push_back((long long)i);
  }
  return make_circuit(std::move(gates), output, std::move(labels));
}

Instance random_instance(std::string_view family, const RandomParams& p) {
  if (family == "cnf") return random_cnf(p.n, p.m, p.k, p.seed);
  if (family == "setsys") return random_set_system(p.n, p.m, p.k, p.seed);
  if (family == "graph") return random_graph(p.n, p.m, p.seed);
  if (family == "graph-bipartite") return random_bipartite_graph(p.n, p.m, p.p, p.seed);
  if (family == "subsetsum") return random_subset_sum(p.n, p.bits, p.seed);
  if (family == "circuit") return random_circuit(p.n, p.m, p.seed, p.with_labels);
  throw ParameterError("unknown instance family '" + std::string(family) + "'");
}

}  // namespace redkit
