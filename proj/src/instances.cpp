#include "redkit/instances.hpp"

#include <algorithm>
#include <set>

#include "redkit/errors.hpp"

namespace redkit {

int CnfFormula::width() const {
  size_t w = 0;
  for (const auto& c : clauses) w = std::max(w, c.size());
  return int(w);
}

CnfFormula make_cnf(int num_vars, std::vector<Clause> clauses) {
  if (num_vars < 0) throw StructuralError("negative variable count");
  for (auto& c : clauses) {
    std::sort(c.begin(), c.end());
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i].var < 0 || c[i].var >= num_vars)
        throw StructuralError("literal variable out of range");
      if (i > 0 && c[i].var == c[i - 1].var)
        throw StructuralError("variable repeated within a clause");
    }
  }
  std::sort(clauses.begin(), clauses.end());
  CnfFormula f;
  f.num_vars = num_vars;
  f.clauses = std::move(clauses);
  return f;
}

int SetSystem::max_set_size() const {
  int w = 0;
  for (const auto& s : sets) w = std::max(w, s.count());
  return w;
}

SetSystem make_set_system(int universe_size, std::vector<Bits> sets, bool multiset) {
  if (universe_size < 0) throw StructuralError("negative universe size");
  for (auto& s : sets) {
    if (s.size_bits() > universe_size) throw StructuralError("set exceeds universe");
    if (s.size_bits() < universe_size) s = s.widened(universe_size);
  }
  std::sort(sets.begin(), sets.end());
  if (!multiset) {
    auto it = std::adjacent_find(sets.begin(), sets.end());
    if (it != sets.end()) throw StructuralError("duplicate set in a plain set system");
  }
  SetSystem sys;
  sys.universe_size = universe_size;
  sys.multiset = multiset;
  sys.sets = std::move(sets);
  return sys;
}

SetSystem make_set_system(int universe_size, const std::vector<std::vector<int>>& sets,
                          bool multiset) {
  std::vector<Bits> bs;
  bs.reserve(sets.size());
  for (const auto& s : sets) {
    for (int e : s)
      if (e < 0 || e >= universe_size) throw StructuralError("element out of range");
    bs.push_back(Bits::from_elements(universe_size, s));
  }
  return make_set_system(universe_size, std::move(bs), multiset);
}

std::vector<Bits> Graph::adjacency() const {
  std::vector<Bits> adj(num_vertices, Bits(num_vertices));
  for (auto [u, v] : edges) {
    adj[u].set(v);
    adj[v].set(u);
  }
  return adj;
}

Graph make_graph(int num_vertices, std::vector<std::pair<int, int>> edges,
                 std::optional<Bits> terminals, std::optional<int> bipartition_a) {
  if (num_vertices < 0) throw StructuralError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
      throw StructuralError("edge endpoint out of range");
    if (u == v) throw StructuralError("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw StructuralError("duplicate edge");
  if (terminals) {
    if (terminals->size_bits() > num_vertices) throw StructuralError("terminal out of range");
    if (terminals->size_bits() < num_vertices) terminals = terminals->widened(num_vertices);
  }
  if (bipartition_a) {
    int a = *bipartition_a;
    if (a < 0 || a > num_vertices) throw StructuralError("bipartition size out of range");
    for (auto [u, v] : edges)
      if ((u < a) == (v < a)) throw StructuralError("edge within one side of the bipartition");
  }
  Graph g;
  g.num_vertices = num_vertices;
  g.edges = std::move(edges);
  g.terminals = std::move(terminals);
  g.bipartition_a = bipartition_a;
  return g;
}

SubsetSumInstance make_subset_sum(std::vector<mpz_class> items, mpz_class target) {
  for (const auto& x : items)
    if (x <= 0) throw StructuralError("subset sum items must be positive");
  if (target < 0) throw StructuralError("negative subset sum target");
  SubsetSumInstance inst;
  inst.items = std::move(items);
  inst.target = std::move(target);
  return inst;
}

int VspCircuit::num_inputs() const {
  int k = 0;
  for (const auto& g : gates)
    if (g.kind == GateKind::input) ++k;
  return k;
}

int VspCircuit::wire_count() const {
  int w = 0;
  for (const auto& g : gates) w += int(g.in.size());
  return w;
}

std::vector<int> VspCircuit::input_indices() const {
  std::vector<int> idx;
  for (int i = 0; i < num_gates(); ++i)
    if (gates[i].kind == GateKind::input) idx.push_back(i);
  return idx;
}

VspCircuit make_circuit(std::vector<Gate> gates, int output,
                        std::optional<std::vector<long long>> labels) {
  if (gates.empty()) throw StructuralError("empty circuit");
  for (size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    size_t arity = g.in.size();
    switch (g.kind) {
      case GateKind::input:
        if (arity != 0) throw StructuralError("input gate with incoming wires");
        break;
      case GateKind::not_gate:
        if (arity != 1) throw StructuralError("NOT gate must have exactly one input");
        break;
      case GateKind::and_gate:
      case GateKind::or_gate:
        if (arity < 1 || arity > 2) throw StructuralError("AND/OR gate must have one or two inputs");
        break;
    }
    for (int j : g.in)
      if (j < 0 || size_t(j) >= i) throw StructuralError("gate input not an earlier gate");
  }
  if (output < 0 || size_t(output) >= gates.size())
    throw StructuralError("output index out of range");
  if (labels && labels->size() != gates.size())
    throw StructuralError("label count does not match gate count");
  VspCircuit c;
  c.gates = std::move(gates);
  c.output = output;
  c.labels = std::move(labels);
  return c;
}

}  // namespace redkit
