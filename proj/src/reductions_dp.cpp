#include "redkit/reductions_dp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "redkit/errors.hpp"
#include "redkit/parity_math.hpp"

namespace redkit {

Graph incidence_bipartite_graph(const SetSystem& sys) {
  int m = sys.num_sets();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int e : sys.sets[i].elements()) edges.emplace_back(i, m + e);
  return make_graph(m + sys.universe_size, std::move(edges), std::nullopt, m);
}

FlipParities flip_parities(const SetSystem& sys, int cap) {
  FlipParities out;
  out.parity_hitting = count_hitting_sets_by_size(sys, cap).parity_total();
  out.parity_covers = count_set_covers_by_size(sys, cap).parity_total();
  out.parity_is = parity_bipartite_independent_sets(incidence_bipartite_graph(sys), cap);
  return out;
}

namespace {

// All q-subsets of [m] in lexicographic order.
std::vector<std::vector<int>> q_subsets(int m, int q) {
  std::vector<std::vector<int>> out;
  if (q > m) return out;
  std::vector<int> idx(q);
  for (int i = 0; i < q; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int pos = q - 1;
    while (pos >= 0 && idx[pos] == m - q + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < q; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

SetSystem with_forced_singletons(const SetSystem& sys, int extra) {
  int wide = sys.universe_size + extra;
  std::vector<Bits> sets;
  sets.reserve(sys.sets.size() + extra);
  for (const Bits& s : sys.sets) sets.push_back(s.widened(wide));
  for (int i = 0; i < extra; ++i)
    sets.push_back(Bits::of(wide, {sys.universe_size + i}));
  return make_set_system(wide, std::move(sets), sys.multiset);
}

}  // namespace

GroupedCoverInstance group_set_cover(const SetSystem& sys, int t, double alpha) {
  if (alpha <= 0) throw ParameterError("alpha must be positive");
  if (t < 0 || t > sys.universe_size)
    throw ParameterError("target must lie in [0, universe size]");
  int q = int(std::ceil(1.0 / alpha - 1e-9));
  if (q < 1) q = 1;

  int pad = 0;
  while ((t + pad) % q != 0 || sys.num_sets() + pad < q) ++pad;
  SetSystem padded = with_forced_singletons(sys, pad);
  int t0 = t + pad;
  int m0 = padded.num_sets();

  if (m0 > 10000 || big_binom(m0, q) > 1000000)
    throw CapacityError("grouped family would be too large");

  std::vector<std::pair<Bits, std::vector<int>>> unions;
  for (const auto& pick : q_subsets(m0, q)) {
    Bits u(padded.universe_size);
    for (int i : pick) u |= padded.sets[i];
    unions.emplace_back(std::move(u), pick);
  }
  std::sort(unions.begin(), unions.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  GroupedCoverInstance out;
  std::vector<Bits> sets;
  for (auto& [u, srcs] : unions) {
    if (!sets.empty() && sets.back() == u) continue;  // keep the first witness
    out.provenance[int(sets.size())] = std::move(srcs);
    sets.push_back(std::move(u));
  }
  out.system = make_set_system(padded.universe_size, std::move(sets));
  out.target = t0 / q;
  out.q = q;
  out.z = 0;
  out.base_universe = padded.universe_size;
  return out;
}

int dj_coefficient(int j, int q, int t_star) {
  if (j < 0 || q < 1 || t_star < 0)
    throw ParameterError("dj_coefficient requires j >= 0, q >= 1, t_star >= 0");
  int acc = 0;
  for (int i = 0; i <= j; ++i)
    acc ^= binom_parity(j, i) & nested_binom_parity(i, q, t_star);
  return acc;
}

namespace {

int smallest_group_power(int m, double alpha, int n) {
  for (long long q = 1; q <= (1LL << 30); q *= 2)
    if (double(m) / double(q) + 2.0 <= alpha * n + 1e-9) return int(q);
  throw ParameterError("no feasible group size for the given alpha");
}

}  // namespace

int parity_cover_pipeline(const SetSystem& sys, double alpha,
                          const SizeParityOracle& size_parity_oracle,
                          ParityLedger* ledger, std::optional<double> density_c,
                          int cap) {
  if (alpha <= 0) throw ParameterError("alpha must be positive");
  if (sys.multiset) throw ParameterError("pipeline input must be a plain set system");
  int n = sys.universe_size;
  int m = sys.num_sets();
  if (density_c && m > *density_c * n + 1e-9)
    throw ParameterError("set count exceeds the declared density bound");
  if (n == 0) return m == 0 ? 1 : 0;
  if (m == 0) return 0;
  if (alpha * n < 3.0)
    return count_set_covers_by_size(sys, cap).parity_total();

  int q = smallest_group_power(m, alpha, n);
  int k_in = std::max(1, sys.max_set_size());
  std::map<int, int> s;
  for (int j = 1; j <= m; ++j) {
    int delta = q - (j % q);
    if (j % q == 0) delta = q;
    int j0 = j + delta;
    int t_star = j0 / q;

    SetSystem padded = with_forced_singletons(sys, delta);
    int m0 = padded.num_sets();
    if (m0 > 10000 || big_binom(m0, q) > 1000000)
      throw CapacityError("grouped family would be too large");
    int base = padded.universe_size;
    int z = 1 + k_in * q * q;
    int wide = base + z;

    std::map<Bits, std::vector<std::vector<int>>> groups;
    for (const auto& pick : q_subsets(m0, q)) {
      Bits u(base);
      for (int i : pick) u |= padded.sets[i];
      groups[u].push_back(pick);
    }

    std::vector<std::pair<Bits, std::vector<int>>> tagged;
    for (auto& [u, picks] : groups) {
      if (z - 1 < 63 && (long long)picks.size() > (1LL << (z - 1)))
        throw StructuralError("duplicate multiplicity exceeds the tag capacity");
      for (size_t l = 0; l < picks.size(); ++l) {
        Bits b = u.widened(wide);
        for (int bit = 0; bit < z - 1; ++bit)
          if ((l >> bit) & 1) b.set(base + bit);
        tagged.emplace_back(std::move(b), std::move(picks[l]));
      }
    }
    Bits sweeper(wide);
    for (int e = 0; e < z; ++e) sweeper.set(base + e);
    tagged.emplace_back(sweeper, std::vector<int>{});
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    GroupedCoverInstance inst;
    std::vector<Bits> sets;
    sets.reserve(tagged.size());
    for (auto& [b, srcs] : tagged) {
      if (!srcs.empty()) inst.provenance[int(sets.size())] = std::move(srcs);
      sets.push_back(std::move(b));
    }
    inst.system = make_set_system(wide, std::move(sets));
    inst.target = t_star + 1;
    inst.q = q;
    inst.z = z;
    inst.base_universe = base;
    if (inst.target > alpha * n + 1e-9)
      throw StructuralError("constructed target exceeds alpha * n");
    if (dj_coefficient(j0, q, t_star) != 1)
      throw StructuralError("fiber parity at j0 is not odd");

    int bit = size_parity_oracle(inst) & 1;
    if (ledger) ledger->d.clear();
    for (int jp = 1; jp < j0; ++jp) {
      int d = dj_coefficient(jp, q, t_star);
      if (ledger) ledger->d[jp] = d;
      int s0 = (jp >= delta + 1) ? s[jp - delta] : 0;
      bit ^= s0 & d;
    }
    if (ledger) ledger->d[j0] = 1;
    s[j] = bit;
    if (ledger) ledger->s[j] = bit;
  }

  int answer = 0;
  for (int j = 1; j <= m; ++j) answer ^= s[j];
  return answer;
}

SteinerReduction set_cover_to_steiner(const SetSystem& sys, int t) {
  if (t < 0) throw ParameterError("negative target");
  int m = sys.num_sets();
  int n = sys.universe_size;
  int hub = m + n;
  int pendant = hub + 1;
  std::vector<std::pair<int, int>> edges;
  Bits covered(n);
  for (int i = 0; i < m; ++i)
    for (int e : sys.sets[i].elements()) {
      edges.emplace_back(i, m + e);
      covered.set(e);
    }
  for (int i = 0; i < m; ++i) edges.emplace_back(i, hub);
  edges.emplace_back(hub, pendant);
  Bits terminals(pendant + 1);
  for (int e = 0; e < n; ++e) terminals.set(m + e);
  terminals.set(pendant);
  SteinerReduction out;
  out.graph = make_graph(pendant + 1, std::move(edges), std::move(terminals));
  out.universe = n;
  out.target = n + t + 2;
  out.trivially_no = covered.count() < n;
  return out;
}

CvcReduction set_cover_to_cvc(const SetSystem& sys, int t) {
  if (t < 0) throw ParameterError("negative target");
  int m = sys.num_sets();
  int n = sys.universe_size;
  int hub = m + n;
  std::vector<std::pair<int, int>> edges;
  Bits covered(n);
  for (int i = 0; i < m; ++i)
    for (int e : sys.sets[i].elements()) {
      edges.emplace_back(i, m + e);
      covered.set(e);
    }
  for (int i = 0; i < m; ++i) edges.emplace_back(i, hub);
  for (int e = 0; e < n; ++e) edges.emplace_back(m + e, hub + 1 + e);
  edges.emplace_back(hub, hub + 1 + n);
  CvcReduction out;
  out.graph = make_graph(hub + n + 2, std::move(edges));
  out.universe = n;
  out.target = t + n + 1;
  out.trivially_no = covered.count() < n;
  return out;
}

SizeIndexedCounts cvc_parity_recover(const SizeIndexedCounts& c_parities,
                                     int universe_size, int i_max, int max_known_size) {
  if (i_max < 0) throw ParameterError("i_max must be nonnegative");
  if (max_known_size < i_max + universe_size + 1)
    throw ParameterError("cvc parities not known far enough to recover s_" +
                         std::to_string(i_max));
  SizeIndexedCounts s;
  for (int i = 1; i <= i_max; ++i) {
    int bit = mpz_odd_p(c_parities.get(i + universe_size + 1).get_mpz_t()) ? 1 : 0;
    for (int ip = 1; ip < i; ++ip) {
      if (i - ip > universe_size + 1) continue;
      int coeff = binom_parity(universe_size + 1, i - ip);
      int sp = mpz_odd_p(s.get(ip).get_mpz_t()) ? 1 : 0;
      bit ^= coeff & sp;
    }
    s.add(i, bit);
  }
  return s;
}

PartitioningReduction set_cover_to_set_partitioning(const SetSystem& sys, int t) {
  std::set<Bits> subsets;
  for (const Bits& s : sys.sets) {
    auto elems = s.elements();
    int sz = int(elems.size());
    for (uint64_t pick = 1; pick < (uint64_t(1) << sz); ++pick) {
      Bits b(sys.universe_size);
      for (int i = 0; i < sz; ++i)
        if ((pick >> i) & 1) b.set(elems[i]);
      subsets.insert(std::move(b));
    }
  }
  PartitioningReduction out;
  out.system = make_set_system(sys.universe_size,
                               std::vector<Bits>(subsets.begin(), subsets.end()));
  out.target = t;
  return out;
}

SubsetSumInstance set_partitioning_to_subset_sum(const SetSystem& sys, int t0) {
  if (t0 < 1) throw ParameterError("t0 must be at least 1");
  int n = sys.universe_size;
  int pad = 0;
  while ((1 << pad) < t0 + 1) ++pad;  // ceil(log2(t0 + 1))
  int card = 0;
  while ((1 << card) < n + 1) ++card;  // ceil(log2(n + 1))
  int card_shift = n + pad;
  int count_shift = n + 2 * pad + card;

  std::vector<mpz_class> items;
  items.reserve(sys.sets.size());
  for (const Bits& s : sys.sets) {
    mpz_class v = 0;
    for (int e : s.elements()) mpz_setbit(v.get_mpz_t(), e);
    mpz_class field = s.count();
    mpz_mul_2exp(field.get_mpz_t(), field.get_mpz_t(), card_shift);
    v += field;
    mpz_class one = 1;
    mpz_mul_2exp(one.get_mpz_t(), one.get_mpz_t(), count_shift);
    v += one;
    items.push_back(std::move(v));
  }
  mpz_class target = 0;
  for (int e = 0; e < n; ++e) mpz_setbit(target.get_mpz_t(), e);
  mpz_class mid = n;
  mpz_mul_2exp(mid.get_mpz_t(), mid.get_mpz_t(), card_shift);
  target += mid;
  mpz_class top = t0;
  mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), count_shift);
  target += top;
  return make_subset_sum(std::move(items), std::move(target));
}

std::vector<SubsetSumInstance> set_partitioning_to_subset_sum_all(const SetSystem& sys,
                                                                  int t) {
  if (t < 1) throw ParameterError("t must be at least 1");
  std::vector<SubsetSumInstance> out;
  out.reserve(t);
  for (int t0 = 1; t0 <= t; ++t0) out.push_back(set_partitioning_to_subset_sum(sys, t0));
  return out;
}

}  // namespace redkit
