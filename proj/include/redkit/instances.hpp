#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "redkit/bits.hpp"

namespace redkit {

// ---------------------------------------------------------------------------
// CNF formulas. Variables are 0-indexed internally; DIMACS I/O is 1-indexed.

struct Lit {
  int var = 0;
  bool positive = true;

  friend bool operator==(const Lit&, const Lit&) = default;
  friend bool operator<(const Lit& a, const Lit& b) {
    if (a.var != b.var) return a.var < b.var;
    return a.positive < b.positive;
  }
};

using Clause = std::vector<Lit>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;  // canonical: literals sorted by var, clauses lexicographic

  int num_clauses() const { return int(clauses.size()); }
  int width() const;  // max clause size, 0 for the empty formula
  double density() const { return num_vars ? double(clauses.size()) / num_vars : 0.0; }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Validates invariants (vars in range, no variable twice in a clause) and
// sorts into canonical order.
CnfFormula make_cnf(int num_vars, std::vector<Clause> clauses);

// ---------------------------------------------------------------------------
// Set systems: a family of subsets of the universe [0, n).

struct SetSystem {
  int universe_size = 0;
  bool multiset = false;        // duplicates allowed and counted with multiplicity
  std::vector<Bits> sets;       // canonical: ascending mask value; duplicates adjacent

  int num_sets() const { return int(sets.size()); }
  int max_set_size() const;     // 0 for the empty family
  double density() const { return universe_size ? double(sets.size()) / universe_size : 0.0; }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

SetSystem make_set_system(int universe_size, std::vector<Bits> sets, bool multiset = false);
SetSystem make_set_system(int universe_size, const std::vector<std::vector<int>>& sets,
                          bool multiset = false);

// ---------------------------------------------------------------------------
// Undirected simple graphs with optional terminal set and bipartition.

struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // canonical: u < v, sorted, unique
  std::optional<Bits> terminals;
  std::optional<int> bipartition_a;        // vertices [0, a) form side A; all edges cross

  int num_edges() const { return int(edges.size()); }
  std::vector<Bits> adjacency() const;     // per-vertex neighbor masks

  friend bool operator==(const Graph&, const Graph&) = default;
};

Graph make_graph(int num_vertices, std::vector<std::pair<int, int>> edges,
                 std::optional<Bits> terminals = std::nullopt,
                 std::optional<int> bipartition_a = std::nullopt);

// ---------------------------------------------------------------------------
// Subset sum.

struct SubsetSumInstance {
  std::vector<mpz_class> items;  // all > 0, stored order preserved
  mpz_class target;              // >= 0

  int num_items() const { return int(items.size()); }
  size_t bit_length() const { return mpz_sizeinbase(target.get_mpz_t(), 2); }

  friend bool operator==(const SubsetSumInstance&, const SubsetSumInstance&) = default;
};

SubsetSumInstance make_subset_sum(std::vector<mpz_class> items, mpz_class target);

// ---------------------------------------------------------------------------
// Fan-in-<=2 boolean circuits in topological order, with an optional integer
// labeling used by the series-parallel check.

enum class GateKind { input, and_gate, or_gate, not_gate };

struct Gate {
  GateKind kind = GateKind::input;
  std::vector<int> in;  // indices of earlier gates; empty iff input

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct VspCircuit {
  std::vector<Gate> gates;
  int output = -1;
  std::optional<std::vector<long long>> labels;  // one per gate when present

  int num_gates() const { return int(gates.size()); }
  int num_inputs() const;
  int wire_count() const;  // total in-degree
  std::vector<int> input_indices() const;

  friend bool operator==(const VspCircuit&, const VspCircuit&) = default;
};

VspCircuit make_circuit(std::vector<Gate> gates, int output,
                        std::optional<std::vector<long long>> labels = std::nullopt);

}  // namespace redkit
