#pragma once

#include <gmpxx.h>

#include <optional>

#include "redkit/counts.hpp"
#include "redkit/instances.hpp"

namespace redkit {

// Exhaustive reference solvers. Every function is exponential-time by design
// and guarded by a hard cap on the enumerated dimension; exceeding the cap
// raises CapacityError rather than truncating.

inline constexpr int kDefaultCap = 24;
inline constexpr long long kDefaultTableCap = 1LL << 26;

mpz_class count_satisfying(const CnfFormula& f, int cap = kDefaultCap);

SizeIndexedCounts count_hitting_sets_by_size(const SetSystem& sys, int cap = kDefaultCap);

// Multiset systems count multiplicity-distinct subfamilies separately.
SizeIndexedCounts count_set_covers_by_size(const SetSystem& sys, int cap = kDefaultCap);

// 2^n * m dynamic programming over universe subsets; empty when U is uncoverable.
std::optional<int> min_set_cover_dp(const SetSystem& sys, int cap = kDefaultCap);

mpz_class count_nae_assignments(const CnfFormula& f, int cap = kDefaultCap);
bool exists_nae_assignment(const CnfFormula& f, int cap = kDefaultCap);

// X ranges over all of 2^U; X and U\X are distinct splittings.
mpz_class count_set_splittings(const SetSystem& sys, int cap = kDefaultCap);

// Grouped sum over subsets of side A: sum of 2^{|B \ N(X)|}, exact.
mpz_class count_bipartite_independent_sets(const Graph& g, int cap = kDefaultCap);
int parity_bipartite_independent_sets(const Graph& g, int cap = kDefaultCap);

// counts[s] = #{X : T subset of X, |X| = s, G[X] connected}. The empty set and
// singletons count as connected.
SizeIndexedCounts count_steiner_sets_by_size(const Graph& g, int cap = kDefaultCap);

// counts[s] = number of vertex covers X with |X| = s and G[X] connected.
SizeIndexedCounts count_cvc_by_size(const Graph& g, int cap = kDefaultCap);

// counts[s] = number of pairwise-disjoint subfamilies of size s whose union is U.
SizeIndexedCounts count_set_partitionings_by_size(const SetSystem& sys, int cap = kDefaultCap);

enum class SubsetSumMode { dp, brute };

bool subset_sum_decide(const SubsetSumInstance& inst, SubsetSumMode mode,
                       int cap = kDefaultCap, long long table_cap = kDefaultTableCap);

mpz_class circuit_count_sat(const VspCircuit& c, int cap = kDefaultCap);

}  // namespace redkit
