#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "redkit/io.hpp"
#include "redkit/instances.hpp"

namespace redkit {

// Thin wrapper over std::mt19937_64 drawing raw 64-bit words. Derived values
// (bounded ints, coin flips) are computed from the words directly so that the
// stream is identical on every platform; std::uniform_int_distribution is
// avoided on purpose because its output is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  int below(int bound);            // uniform-ish in [0, bound)
  bool coin() { return next() & 1; }
  bool chance(double p);           // true with probability ~p

 private:
  std::mt19937_64 engine_;
};

CnfFormula random_cnf(int n, int m, int k, uint64_t seed);
SetSystem random_set_system(int n, int m, int k, uint64_t seed);
Graph random_graph(int n, int num_edges, uint64_t seed);
Graph random_bipartite_graph(int a, int b, double p, uint64_t seed);
SubsetSumInstance random_subset_sum(int n, int bits, uint64_t seed);
VspCircuit random_circuit(int n_inputs, int n_gates, uint64_t seed, bool with_labels = false);

struct RandomParams {
  int n = 0;
  int m = 0;
  int k = 3;
  double p = 0.5;
  int bits = 8;
  bool with_labels = false;
  uint64_t seed = 0;
};

// family: cnf | setsys | graph | graph-bipartite | subsetsum | circuit
Instance random_instance(std::string_view family, const RandomParams& params);

}  // namespace redkit
