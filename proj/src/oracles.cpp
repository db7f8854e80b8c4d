#include "redkit/oracles.hpp"

#include <algorithm>
#include <vector>

#include "redkit/bits.hpp"
#include "redkit/errors.hpp"

namespace redkit {

namespace {

void check_cap(int value, int cap, const char* what) {
  if (value > cap)
    throw CapacityError(std::string(what) + " " + std::to_string(value) +
                        " exceeds the brute-force cap " + std::to_string(cap));
  if (value > 63)
    throw CapacityError(std::string(what) + " " + std::to_string(value) +
                        " exceeds the 63-bit enumeration limit");
}

struct ClauseMasks {
  uint64_t pos = 0;
  uint64_t neg = 0;
};

std::vector<ClauseMasks> clause_masks(const CnfFormula& f) {
  std::vector<ClauseMasks> out(f.clauses.size());
  for (size_t i = 0; i < f.clauses.size(); ++i)
    for (const Lit& l : f.clauses[i])
      (l.positive ? out[i].pos : out[i].neg) |= uint64_t(1) << l.var;
  return out;
}

std::vector<uint64_t> low_masks(const SetSystem& sys) {
  std::vector<uint64_t> out;
  out.reserve(sys.sets.size());
  for (const Bits& b : sys.sets) out.push_back(b.low_word());
  return out;
}

// Connectivity of the sub-mask x under per-vertex adjacency masks; the empty
// set and singletons are connected.
bool connected_submask(uint64_t x, const std::vector<uint64_t>& adj) {
  if (x == 0) return true;
  uint64_t start = x & (~x + 1);
  uint64_t reach = start;
  for (;;) {
    uint64_t frontier = 0;
    uint64_t r = reach;
    while (r) {
      int v = __builtin_ctzll(r);
      r &= r - 1;
      frontier |= adj[v];
    }
    uint64_t grown = (reach | frontier) & x;
    if (grown == reach) break;
    reach = grown;
  }
  return reach == x;
}

std::vector<uint64_t> adjacency_masks(const Graph& g) {
  std::vector<uint64_t> adj(g.num_vertices, 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= uint64_t(1) << v;
    adj[v] |= uint64_t(1) << u;
  }
  return adj;
}

}  // namespace

mpz_class count_satisfying(const CnfFormula& f, int cap) {
  check_cap(f.num_vars, cap, "variable count");
  auto masks = clause_masks(f);
  mpz_class count = 0;
  for (uint64_t a = 0; a < (uint64_t(1) << f.num_vars); ++a) {
    bool ok = true;
    for (const ClauseMasks& c : masks)
      if ((a & c.pos) == 0 && (~a & c.neg) == 0) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

SizeIndexedCounts count_hitting_sets_by_size(const SetSystem& sys, int cap) {
  check_cap(sys.universe_size, cap, "universe size");
  auto masks = low_masks(sys);
  SizeIndexedCounts counts;
  for (uint64_t h = 0; h < (uint64_t(1) << sys.universe_size); ++h) {
    bool ok = true;
    for (uint64_t s : masks)
      if ((h & s) == 0) {
        ok = false;
        break;
      }
    if (ok) counts.add(__builtin_popcountll(h));
  }
  return counts;
}

SizeIndexedCounts count_set_covers_by_size(const SetSystem& sys, int cap) {
  check_cap(sys.num_sets(), cap, "set count");
  SizeIndexedCounts counts;
  int m = sys.num_sets();
  if (sys.universe_size <= 64) {
    auto masks = low_masks(sys);
    uint64_t full = sys.universe_size == 64 ? ~uint64_t(0)
                                            : (uint64_t(1) << sys.universe_size) - 1;
    for (uint64_t pick = 0; pick < (uint64_t(1) << m); ++pick) {
      uint64_t u = 0, p = pick;
      while (p) {
        u |= masks[__builtin_ctzll(p)];
        p &= p - 1;
      }
      if (u == full) counts.add(__builtin_popcountll(pick));
    }
    return counts;
  }
  Bits full = Bits::full(sys.universe_size);
  for (uint64_t pick = 0; pick < (uint64_t(1) << m); ++pick) {
    Bits u(sys.universe_size);
    uint64_t p = pick;
    while (p) {
      u |= sys.sets[__builtin_ctzll(p)];
      p &= p - 1;
    }
    if (u == full) counts.add(__builtin_popcountll(pick));
  }
  return counts;
}

std::optional<int> min_set_cover_dp(const SetSystem& sys, int cap) {
  check_cap(sys.universe_size, cap, "universe size");
  int n = sys.universe_size;
  auto masks = low_masks(sys);
  uint64_t full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  constexpr int kInf = 1 << 30;
  std::vector<int> dp(size_t(1) << n, kInf);
  dp[0] = 0;
  for (uint64_t mask = 0; mask <= full; ++mask) {
    if (dp[mask] == kInf) continue;
    for (uint64_t s : masks) {
      uint64_t nm = mask | s;
      if (dp[nm] > dp[mask] + 1) dp[nm] = dp[mask] + 1;
    }
    if (mask == full) break;
  }
  if (dp[full] == kInf) return std::nullopt;
  return dp[full];
}

mpz_class count_nae_assignments(const CnfFormula& f, int cap) {
  check_cap(f.num_vars, cap, "variable count");
  auto masks = clause_masks(f);
  mpz_class count = 0;
  for (uint64_t a = 0; a < (uint64_t(1) << f.num_vars); ++a) {
    bool ok = true;
    for (const ClauseMasks& c : masks) {
      bool some_true = (a & c.pos) != 0 || (~a & c.neg) != 0;
      bool some_false = (~a & c.pos) != 0 || (a & c.neg) != 0;
      if (!some_true || !some_false) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

bool exists_nae_assignment(const CnfFormula& f, int cap) {
  return count_nae_assignments(f, cap) > 0;
}

mpz_class count_set_splittings(const SetSystem& sys, int cap) {
  check_cap(sys.universe_size, cap, "universe size");
  auto masks = low_masks(sys);
  mpz_class count = 0;
  for (uint64_t x = 0; x < (uint64_t(1) << sys.universe_size); ++x) {
    bool ok = true;
    for (uint64_t s : masks)
      if ((x & s) == 0 || (~x & s) == 0) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

mpz_class count_bipartite_independent_sets(const Graph& g, int cap) {
  if (!g.bipartition_a) throw ParameterError("graph carries no bipartition");
  check_cap(g.num_vertices, cap, "vertex count");
  int a = *g.bipartition_a;
  int b = g.num_vertices - a;
  std::vector<uint64_t> nb(a, 0);
  for (auto [u, v] : g.edges) {
    int left = std::min(u, v), right = std::max(u, v);
    nb[left] |= uint64_t(1) << (right - a);
  }
  mpz_class total = 0;
  for (uint64_t x = 0; x < (uint64_t(1) << a); ++x) {
    uint64_t blocked = 0;
    uint64_t p = x;
    while (p) {
      blocked |= nb[__builtin_ctzll(p)];
      p &= p - 1;
    }
    mpz_class term = 1;
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), b - __builtin_popcountll(blocked));
    total += term;
  }
  return total;
}

int parity_bipartite_independent_sets(const Graph& g, int cap) {
  mpz_class total = count_bipartite_independent_sets(g, cap);
  return mpz_odd_p(total.get_mpz_t()) ? 1 : 0;
}

SizeIndexedCounts count_steiner_sets_by_size(const Graph& g, int cap) {
  if (!g.terminals) throw ParameterError("graph carries no terminal set");
  check_cap(g.num_vertices, cap, "vertex count");
  auto adj = adjacency_masks(g);
  uint64_t t = g.terminals->low_word();
  uint64_t comp = (g.num_vertices == 64 ? ~uint64_t(0)
                                        : (uint64_t(1) << g.num_vertices) - 1) &
                  ~t;
  SizeIndexedCounts counts;
  uint64_t sub = comp;
  for (;;) {
    uint64_t x = t | sub;
    if (connected_submask(x, adj)) counts.add(__builtin_popcountll(x));
    if (sub == 0) break;
    sub = (sub - 1) & comp;
  }
  return counts;
}

SizeIndexedCounts count_cvc_by_size(const Graph& g, int cap) {
  check_cap(g.num_vertices, cap, "vertex count");
  auto adj = adjacency_masks(g);
  std::vector<std::pair<uint64_t, uint64_t>> edge_masks;
  edge_masks.reserve(g.edges.size());
  for (auto [u, v] : g.edges)
    edge_masks.emplace_back(uint64_t(1) << u, uint64_t(1) << v);
  SizeIndexedCounts counts;
  for (uint64_t x = 0; x < (uint64_t(1) << g.num_vertices); ++x) {
    bool cover = true;
    for (auto [mu, mv] : edge_masks)
      if ((x & mu) == 0 && (x & mv) == 0) {
        cover = false;
        break;
      }
    if (cover && connected_submask(x, adj)) counts.add(__builtin_popcountll(x));
  }
  return counts;
}

SizeIndexedCounts count_set_partitionings_by_size(const SetSystem& sys, int cap) {
  check_cap(sys.num_sets(), cap, "set count");
  int m = sys.num_sets();
  SizeIndexedCounts counts;
  if (sys.universe_size <= 64) {
    auto masks = low_masks(sys);
    std::vector<int> sizes;
    for (const Bits& b : sys.sets) sizes.push_back(b.count());
    uint64_t full = sys.universe_size == 64 ? ~uint64_t(0)
                                            : (uint64_t(1) << sys.universe_size) - 1;
    for (uint64_t pick = 0; pick < (uint64_t(1) << m); ++pick) {
      uint64_t u = 0;
      int total = 0;
      uint64_t p = pick;
      while (p) {
        int i = __builtin_ctzll(p);
        u |= masks[i];
        total += sizes[i];
        p &= p - 1;
      }
      if (u == full && total == sys.universe_size)
        counts.add(__builtin_popcountll(pick));
    }
    return counts;
  }
  Bits full = Bits::full(sys.universe_size);
  for (uint64_t pick = 0; pick < (uint64_t(1) << m); ++pick) {
    Bits u(sys.universe_size);
    int total = 0;
    uint64_t p = pick;
    while (p) {
      int i = __builtin_ctzll(p);
      u |= sys.sets[i];
      total += sys.sets[i].count();
      p &= p - 1;
    }
    if (u == full && total == sys.universe_size) counts.add(__builtin_popcountll(pick));
  }
  return counts;
}

namespace {

bool subset_sum_dp(const SubsetSumInstance& inst, long long table_cap) {
  if (inst.target > mpz_class(static_cast<long>(table_cap)))
    throw CapacityError("subset sum target exceeds the DP table cap");
  unsigned long t = inst.target.get_ui();
  size_t words = t / 64 + 1;
  std::vector<uint64_t> reach(words, 0);
  reach[0] = 1;
  for (const mpz_class& item : inst.items) {
    if (item > t) continue;
    unsigned long a = item.get_ui();
    size_t word_shift = a / 64;
    unsigned bit_shift = a % 64;
    for (size_t i = words; i-- > 0;) {
      uint64_t v = 0;
      if (i >= word_shift) {
        v = reach[i - word_shift] << bit_shift;
        if (bit_shift && i > word_shift) v |= reach[i - word_shift - 1] >> (64 - bit_shift);
      }
      reach[i] |= v;
    }
  }
  return (reach[t / 64] >> (t % 64)) & 1;
}

bool subset_sum_brute(const std::vector<mpz_class>& items, size_t i, const mpz_class& remaining) {
  if (remaining == 0) return true;
  if (i == items.size()) return false;
  if (items[i] <= remaining && subset_sum_brute(items, i + 1, remaining - items[i]))
    return true;
  return subset_sum_brute(items, i + 1, remaining);
}

}  // namespace

bool subset_sum_decide(const SubsetSumInstance& inst, SubsetSumMode mode, int cap,
                       long long table_cap) {
  if (mode == SubsetSumMode::dp) return subset_sum_dp(inst, table_cap);
  if (inst.num_items() > cap)
    throw CapacityError("item count " + std::to_string(inst.num_items()) +
                        " exceeds the brute-force cap " + std::to_string(cap));
  return subset_sum_brute(inst.items, 0, inst.target);
}

mpz_class circuit_count_sat(const VspCircuit& c, int cap) {
  for (size_t i = 0; i < c.gates.size(); ++i)
    for (int j : c.gates[i].in)
      if (j < 0 || size_t(j) >= i)
        throw StructuralError("gate inputs must reference earlier gates");
  int n = c.num_inputs();
  check_cap(n, cap, "input count");
  auto inputs = c.input_indices();
  std::vector<char> val(c.gates.size(), 0);
  mpz_class count = 0;
  for (uint64_t a = 0; a < (uint64_t(1) << n); ++a) {
    for (int i = 0; i < n; ++i) val[inputs[i]] = (a >> i) & 1;
    for (size_t g = 0; g < c.gates.size(); ++g) {
      const Gate& gate = c.gates[g];
      switch (gate.kind) {
        case GateKind::input:
          break;
        case GateKind::not_gate:
          val[g] = !val[gate.in[0]];
          break;
        case GateKind::and_gate: {
          char v = 1;
          for (int j : gate.in) v = char(v && val[j]);
          val[g] = v;
          break;
        }
        case GateKind::or_gate: {
          char v = 0;
          for (int j : gate.in) v = char(v || val[j]);
          val[g] = v;
          break;
        }
      }
    }
    if (val[c.output]) ++count;
  }
  return count;
}

}  // namespace redkit
