#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "redkit/counts.hpp"
#include "redkit/instances.hpp"
#include "redkit/oracles.hpp"

namespace redkit {

// ---------------------------------------------------------------------------
// Parity flip between hitting sets, set covers, and bipartite independent sets.

struct FlipParities {
  int parity_hitting = 0;
  int parity_covers = 0;
  int parity_is = 0;
};

// Sets on side A (indices [0, m)), elements on side B (indices [m, m+n)).
Graph incidence_bipartite_graph(const SetSystem& sys);

// All three parities are equal on every input; returned separately so the
// identity itself is checkable.
FlipParities flip_parities(const SetSystem& sys, int cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Set Cover grouping (decision) and the parity-preserving cover pipeline.

struct GroupedCoverInstance {
  SetSystem system;   // deduplicated q-fold unions (tagged when z > 0), plus
                      // the tag-sweeper set when z > 0
  int target = 0;
  int q = 1;
  int z = 0;               // tag-element count; 0 when no tagging was needed
  int base_universe = 0;   // universe size before tag elements
  std::map<int, std::vector<int>> provenance;  // output set index -> q source indices
};

// q = smallest positive integer with 1/q <= alpha. The instance is padded with
// forced singletons until q divides t and at least q sets exist; the output
// target t/q is at most alpha * universe and the YES/NO decision is preserved.
GroupedCoverInstance group_set_cover(const SetSystem& sys, int t, double alpha);

struct ParityLedger {
  std::map<int, int> s;  // size j -> parity of input covers of size exactly j
  std::map<int, int> d;  // fiber parities of the most recent iteration
};

using SizeParityOracle = std::function<int(const GroupedCoverInstance&)>;

// Parity of the total number of set covers, recovered size by size through
// grouped instances whose targets stay at most alpha * n. The callback answers
// "number of covers of size exactly `target`, mod 2" for each sub-instance.
// When alpha * n < 3 the answer is computed by direct enumeration instead.
int parity_cover_pipeline(const SetSystem& sys, double alpha,
                          const SizeParityOracle& size_parity_oracle,
                          ParityLedger* ledger = nullptr,
                          std::optional<double> density_c = std::nullopt,
                          int cap = kDefaultCap);

// Parity of the number of ways a fixed j-set cover arises as a union of
// t_star q-subsets covering it; depends on j only. Equals 1 at j = q * t_star
// when q is a power of two.
int dj_coefficient(int j, int q, int t_star);

// ---------------------------------------------------------------------------
// Gadget reductions from Set Cover.

struct SteinerReduction {
  Graph graph;          // incidence graph + hub vertex + pendant terminal
  int universe = 0;     // |U| of the input
  int target = 0;       // |U| + t + 2
  bool trivially_no = false;  // some element lies in no set

  int steiner_size(int cover_size) const { return universe + cover_size + 2; }
};

SteinerReduction set_cover_to_steiner(const SetSystem& sys, int t);

struct CvcReduction {
  Graph graph;          // incidence graph + hub + pendants on elements and hub
  int universe = 0;
  int target = 0;       // t + |U| + 1
  bool trivially_no = false;
};

// Connected-vertex-cover counts of the output satisfy
//   c_j = sum_i s_i * C(|U|+1, j - i - |U| - 1)
// where s_i counts input set covers of size i.
CvcReduction set_cover_to_cvc(const SetSystem& sys, int t);

// Triangular back-substitution mod 2: recovers the cover parities s_1..s_i_max
// from CVC-count parities. c_parities must be known (possibly zero) for every
// size up to i_max + universe_size + 1; max_known_size declares that range.
SizeIndexedCounts cvc_parity_recover(const SizeIndexedCounts& c_parities,
                                     int universe_size, int i_max, int max_known_size);

// ---------------------------------------------------------------------------
// Set Cover -> Set Partitioning -> Subset Sum.

struct PartitioningReduction {
  SetSystem system;  // all nonempty subsets of input sets, deduplicated
  int target = 0;    // unchanged; min partitioning <= t iff min cover <= t
};

PartitioningReduction set_cover_to_set_partitioning(const SetSystem& sys, int t);

// Three bit fields (least significant first): n indicator bits, a zero pad,
// a cardinality field, a zero pad, and a set-count field; pads are
// ceil(log2(t0+1)) bits wide. YES iff a partitioning with exactly t0 sets exists.
SubsetSumInstance set_partitioning_to_subset_sum(const SetSystem& sys, int t0);

// One instance per t0 in [1, t]; some instance is YES iff a partitioning of
// size at most t exists.
std::vector<SubsetSumInstance> set_partitioning_to_subset_sum_all(const SetSystem& sys,
                                                                  int t);

}  // namespace redkit
