#include "redkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

#include "redkit/bench.hpp"
#include "redkit/bits.hpp"
#include "redkit/errors.hpp"
#include "redkit/io.hpp"
#include "redkit/parity_math.hpp"
#include "redkit/random.hpp"
#include "redkit/reductions_branch.hpp"
#include "redkit/reductions_dp.hpp"

namespace redkit {

namespace {

// Number of distinct nonempty sets of size <= k over [0, n), saturating at 1000;
// corpora clamp m to this so random_set_system stays feasible.
int max_distinct(int n, int k) {
  long long total = 0;
  for (int s = 1; s <= k; ++s) {
    long long c = 1;
    for (int i = 0; i < s; ++i) c = c * (n - i) / (i + 1);
    total += c;
    if (total > 1000) return 1000;
  }
  return int(total);
}

int parity_of(const mpz_class& v) { return mpz_odd_p(v.get_mpz_t()) ? 1 : 0; }

struct CaseRunner {
  SuiteResult& result;

  void finish(int id, std::string detail) {
    CaseRecord rec;
    rec.id = id;
    rec.passed = detail.empty();
    rec.detail = std::move(detail);
    if (!rec.passed) ++result.failures;
    ++result.cases;
    result.records.push_back(std::move(rec));
  }
};

std::string fmt_msg(const char* what, const std::string& extra) {
  return extra.empty() ? std::string(what) : std::string(what) + " (" + extra + ")";
}

// --- suite: sattohit -------------------------------------------------------

void suite_sattohit(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 200;
  std::vector<int> sizes = opts.sizes.empty() ? std::vector<int>{3, 6} : opts.sizes;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    int n = sizes[rng.below(int(sizes.size()))];
    int m = 1 + rng.below(6);
    int k = 1 + rng.below(std::min(n, 3));
    CnfFormula f = random_cnf(n, m, k, rng.next());
    std::string err;
    try {
      CnfFormula padded = pad_to_multiple(f, 3);
      HittingSetInstance hs = cnf_to_hitting_set(padded, 3);
      mpz_class want = count_satisfying(padded, opts.cap);
      mpz_class got = count_hitting_sets_by_size(hs.system, opts.cap).get(hs.target);
      if (got != want) {
        std::ostringstream os;
        os << "n=" << n << " m=" << m << " k=" << k << ": hitting sets of size "
           << hs.target << " = " << got << ", satisfying assignments = " << want;
        err = os.str();
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: psattophit -----------------------------------------------------

void suite_psattophit(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 200;
  std::vector<int> sizes = opts.sizes.empty() ? std::vector<int>{3, 6} : opts.sizes;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    int n = sizes[rng.below(int(sizes.size()))];
    int m = 1 + rng.below(6);
    int k = 1 + rng.below(std::min(n, 3));
    CnfFormula f = random_cnf(n, m, k, rng.next());
    std::string err;
    try {
      CnfFormula padded = pad_to_multiple(f, 3);
      SetSystem wide = cnf_to_parity_hitting_set(padded, 3);
      int want = parity_of(count_satisfying(padded, opts.cap));
      int got = count_hitting_sets_by_size(wide, opts.cap).parity_total();
      if (got != want) {
        std::ostringstream os;
        os << "n=" << n << " m=" << m << " k=" << k << ": total hitting parity " << got
           << ", satisfying parity " << want;
        err = os.str();
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: flip ------------------------------------------------------------

void suite_flip(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 200;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    int n = 1 + rng.below(10);
    int m = 1 + rng.below(10);
    int k = 1 + rng.below(std::min(n, 3));
    m = std::min(m, max_distinct(n, k));
    SetSystem sys = random_set_system(n, m, k, rng.next());
    std::string err;
    try {
      FlipParities fp = flip_parities(sys, opts.cap);
      if (fp.parity_hitting != fp.parity_covers || fp.parity_covers != fp.parity_is) {
        std::ostringstream os;
        os << "n=" << n << " m=" << m << ": hitting=" << fp.parity_hitting
           << " covers=" << fp.parity_covers << " independent-sets=" << fp.parity_is;
        err = os.str();
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: lucas ------------------------------------------------------------

void suite_lucas(const SuiteOptions& opts, SuiteResult& result) {
  int max_a = opts.cases > 0 ? std::min(opts.cases, 2000) : 64;
  CaseRunner runner{result};
  std::vector<uint8_t> row = {1};  // Pascal row mod 2
  for (int a = 0; a <= max_a; ++a) {
    std::string err;
    for (int b = 0; b <= a && err.empty(); ++b) {
      int want = row[b];
      int got = binom_parity(a, b);
      if (got != want) {
        std::ostringstream os;
        os << "binom_parity(" << a << ", " << b << ") = " << got << ", Pascal says "
           << want;
        err = os.str();
      }
    }
    runner.finish(a, err);
    std::vector<uint8_t> next(a + 2, 1);
    for (int b = 1; b <= a; ++b) next[b] = row[b - 1] ^ row[b];
    row = std::move(next);
  }
}

// --- suite: splitting-chain --------------------------------------------------

void suite_splitting_chain(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 100;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    int n = 1 + rng.below(8);
    int k = 1 + rng.below(std::min(n, 3));
    int m = std::min(1 + rng.below(6), max_distinct(n, k));
    SetSystem sys = random_set_system(n, m, k, rng.next());
    int t = rng.below(n + 1);
    int p = 1 + rng.below(2);
    std::string err;
    try {
      HittingSetInstance inst{sys, t};
      auto outs = hitting_set_to_set_splitting(inst, p);
      auto hits = count_hitting_sets_by_size(sys, opts.cap);
      bool want = false;
      for (int s = 0; s <= t && !want; ++s)
        if (hits.get(s) > 0) want = true;
      bool got = false;
      for (const SetSystem& out : outs)
        if (count_set_splittings(out, opts.cap) > 0) {
          got = true;
          break;
        }
      if (got != want) {
        std::ostringstream os;
        os << "n=" << n << " m=" << m << " t=" << t << " p=" << p << ": chain says "
           << (got ? "YES" : "NO") << ", oracle says " << (want ? "YES" : "NO");
        err = os.str();
      }
      for (size_t oi = 0; oi < outs.size() && oi < 2 && err.empty(); ++oi) {
        const SetSystem& out = outs[oi];
        CnfFormula nae = set_splitting_to_nae_cnf(out);
        mpz_class nae_count = count_nae_assignments(nae, opts.cap);
        if (nae_count != count_set_splittings(out, opts.cap))
          err = "not-all-equal count differs from splitting count";
        else if (count_satisfying(nae_to_cnf(nae), opts.cap) != nae_count)
          err = "doubled-clause formula count differs from not-all-equal count";
        else if ((nae_count > 0) != exists_nae_assignment(nae, opts.cap))
          err = "existence probe disagrees with the count";
      }
      if (err.empty()) {
        CnfFormula mono = hitting_set_to_monotone_cnf(sys);
        if (count_satisfying(mono, opts.cap) !=
            count_hitting_sets_by_size(sys, opts.cap).total())
          err = "monotone formula count differs from total hitting sets";
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: setcover-group ----------------------------------------------------

void suite_setcover_group(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 100;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    int n = 1 + rng.below(10);
    int m = 1 + rng.below(10);
    int k = 1 + rng.below(std::min(n, 3));
    m = std::min(m, max_distinct(n, k));
    SetSystem sys = random_set_system(n, m, k, rng.next());
    int t = rng.below(n + 1);
    double alpha = 0.5;
    std::string err;
    try {
      GroupedCoverInstance g = group_set_cover(sys, t, alpha);
      auto mc = min_set_cover_dp(sys, opts.cap);
      auto mcg = min_set_cover_dp(g.system, opts.cap);
      bool orig_yes = mc && *mc <= t;
      bool grouped_yes = mcg && *mcg <= g.target;
      if (g.target > alpha * g.system.universe_size + 1e-9)
        err = "grouped target exceeds alpha times the grouped universe";
      else if (orig_yes != grouped_yes) {
        std::ostringstream os;
        os << "n=" << n << " m=" << m << " t=" << t << ": original "
           << (orig_yes ? "YES" : "NO") << ", grouped " << (grouped_yes ? "YES" : "NO");
        err = os.str();
      }
      int pad = g.base_universe - n;
      for (const auto& [gi, srcs] : g.provenance) {
        if (!err.empty()) break;
        if (int(srcs.size()) != g.q) {
          err = "provenance entry is not a q-subfamily";
          break;
        }
        Bits u(g.base_universe);
        for (int si : srcs) {
          if (si < 0 || si >= m + pad) {
            err = "provenance index out of range";
            break;
          }
          if (si < m)
            u |= sys.sets[si].widened(g.base_universe);
          else
            u.set(n + (si - m));
        }
        if (err.empty() && !(u == g.system.sets[gi]))
          err = "provenance union does not reproduce the grouped set";
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: psetcover-pipeline -------------------------------------------------

void suite_psetcover_pipeline(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 100;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    int n = 4 + rng.below(5);
    int mcap = n <= 5 ? 10 : (n <= 7 ? 3 : 4);
    int m = 1 + rng.below(mcap);
    int k = 1 + rng.below(std::min(n, 3));
    m = std::min(m, max_distinct(n, k));
    SetSystem sys = random_set_system(n, m, k, rng.next());
    double alpha = 0.5;
    std::string err;
    try {
      int want = count_set_covers_by_size(sys, opts.cap).parity_total();
      auto oracle = [&](const GroupedCoverInstance& gi) {
        if (err.empty() && gi.target > alpha * n + 1e-9)
          err = "sub-instance target exceeds alpha times the universe";
        if (err.empty()) {
          // duplicate multiplicity: tagged sets sharing one base-universe union
          uint64_t base_mask = gi.base_universe >= 64
                                   ? ~uint64_t(0)
                                   : (uint64_t(1) << gi.base_universe) - 1;
          std::map<uint64_t, long long> mult;
          for (const auto& [idx, srcs] : gi.provenance)
            ++mult[gi.system.sets[idx].low_word() & base_mask];
          long long bound = 1LL << std::min(62, k * gi.q * gi.q);
          for (const auto& [mask, cnt] : mult)
            if (cnt > bound) {
              err = "duplicate multiplicity exceeds 2^(k q^2)";
              break;
            }
        }
        return count_set_covers_by_size(gi.system, std::max(opts.cap, 26))
            .parity_total();
      };
      int got = parity_cover_pipeline(sys, alpha, oracle, nullptr, std::nullopt,
                                      opts.cap);
      if (err.empty() && got != want) {
        std::ostringstream os;
        os << "n=" << n << " m=" << m << " k=" << k << ": pipeline parity " << got
           << ", oracle parity " << want;
        err = os.str();
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: oddpartition --------------------------------------------------------

void suite_oddpartition(const SuiteOptions&, SuiteResult& result) {
  CaseRunner runner{result};
  int id = 0;
  for (int q : {1, 2, 4})
    for (int ts = 0; ts <= 6; ++ts) {
      std::string err;
      if (dj_coefficient(q * ts, q, ts) != 1) {
        std::ostringstream os;
        os << "coefficient at j = q*t* is even for q=" << q << " t*=" << ts;
        err = os.str();
      }
      runner.finish(id++, err);
    }
  // d_j against direct fiber counting: parity of the number of ways to cover
  // [j] with exactly t* subsets of size q.
  for (int q : {1, 2})
    for (int j = 0; j <= 6; ++j) {
      std::string err;
      std::vector<Bits> fam;
      if (q <= j) {
        std::vector<int> idx(q);
        for (int i = 0; i < q; ++i) idx[i] = i;
        for (;;) {
          fam.push_back(Bits::from_elements(j, idx));
          int pos = q - 1;
          while (pos >= 0 && idx[pos] == j - q + pos) --pos;
          if (pos < 0) break;
          ++idx[pos];
          for (int i = pos + 1; i < q; ++i) idx[i] = idx[i - 1] + 1;
        }
      }
      auto counts = count_set_covers_by_size(make_set_system(j, fam));
      for (int ts = 0; ts <= 6 && err.empty(); ++ts) {
        int got = dj_coefficient(j, q, ts);
        int want = parity_of(counts.get(ts));
        if (got != want) {
          std::ostringstream os;
          os << "d_j mismatch at j=" << j << " q=" << q << " t*=" << ts << ": " << got
             << " vs fiber parity " << want;
          err = os.str();
        }
      }
      runner.finish(id++, err);
    }
}

// --- suite: steiner ---------------------------------------------------------------

void suite_steiner(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 100;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    int n = 1 + rng.below(5);
    int m = 1 + rng.below(6);
    int k = 1 + rng.below(std::min(n, 3));
    m = std::min(m, max_distinct(n, k));
    SetSystem sys = random_set_system(n, m, k, rng.next());
    int t = rng.below(n + 1);
    std::string err;
    try {
      SteinerReduction sr = set_cover_to_steiner(sys, t);
      auto covers = count_set_covers_by_size(sys, opts.cap);
      auto steiner = count_steiner_sets_by_size(sr.graph, opts.cap);
      for (int i = 0; i <= m && err.empty(); ++i)
        if (covers.get(i) != steiner.get(sr.steiner_size(i))) {
          std::ostringstream os;
          os << "covers[" << i << "] = " << covers.get(i) << " but connected sets of size "
             << sr.steiner_size(i) << " = " << steiner.get(sr.steiner_size(i));
          err = os.str();
        }
      for (const auto& [size, cnt] : steiner.counts) {
        if (!err.empty()) break;
        int i = size - n - 2;
        if (cnt != 0 && (i < 0 || i > m))
          err = "connected superset count at a size outside the cover range";
      }
      if (err.empty()) {
        bool coverable = bool(min_set_cover_dp(sys, opts.cap));
        if (sr.trivially_no == coverable)
          err = "trivially-no flag disagrees with coverability";
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: cvc ----------------------------------------------------------------------

void suite_cvc(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 100;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    int n = 1 + rng.below(5);
    int m = 1 + rng.below(6);
    int k = 1 + rng.below(std::min(n, 3));
    m = std::min(m, max_distinct(n, k));
    SetSystem sys = random_set_system(n, m, k, rng.next());
    int t = rng.below(n + 1);
    std::string err;
    try {
      CvcReduction cr = set_cover_to_cvc(sys, t);
      auto covers = count_set_covers_by_size(sys, opts.cap);
      auto cvc = count_cvc_by_size(cr.graph, opts.cap);
      int vmax = cr.graph.num_vertices;
      for (int j = 0; j <= vmax && err.empty(); ++j) {
        mpz_class want = 0;
        for (int i = 1; i <= m; ++i) {
          int b = j - i - n - 1;
          if (b < 0 || b > n + 1) continue;
          want += covers.get(i) * big_binom(n + 1, b);
        }
        if (cvc.get(j) != want) {
          std::ostringstream os;
          os << "convolution fails at size " << j << ": " << cvc.get(j) << " vs "
             << want;
          err = os.str();
        }
      }
      if (err.empty()) {
        SizeIndexedCounts cpar;
        for (int j = 0; j <= vmax; ++j) cpar.add(j, parity_of(cvc.get(j)));
        SizeIndexedCounts rec = cvc_parity_recover(cpar, n, m, vmax);
        for (int i = 1; i <= m && err.empty(); ++i)
          if (parity_of(rec.get(i)) != parity_of(covers.get(i))) {
            std::ostringstream os;
            os << "recovered parity differs at cover size " << i;
            err = os.str();
          }
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: partitioning-subsetsum ---------------------------------------------------

void suite_partitioning_subsetsum(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 100;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    int n = 1 + rng.below(10);
    int m = 1 + rng.below(8);
    int k = 1 + rng.below(std::min(n, 3));
    m = std::min(m, max_distinct(n, k));
    SetSystem sys = random_set_system(n, m, k, rng.next());
    int t = 1 + rng.below(n);
    std::string err;
    try {
      PartitioningReduction pr = set_cover_to_set_partitioning(sys, t);
      // independent minimum-partitioning size via subset dp over universe masks
      std::vector<uint64_t> fam;
      for (const Bits& s : pr.system.sets) fam.push_back(s.low_word());
      std::vector<int> dp(size_t(1) << n, 1 << 28);
      dp[0] = 0;
      for (uint64_t mask = 1; mask < (uint64_t(1) << n); ++mask)
        for (uint64_t s : fam) {
          if ((s & mask) != s) continue;
          if (dp[mask ^ s] + 1 < dp[mask]) dp[mask] = dp[mask ^ s] + 1;
        }
      int minp = dp[(size_t(1) << n) - 1];
      auto mc = min_set_cover_dp(sys, opts.cap);
      bool yes_part = minp <= pr.target;
      bool yes_cover = mc && *mc <= t;
      if (yes_part != yes_cover) {
        std::ostringstream os;
        os << "n=" << n << " m=" << m << " t=" << t << ": partitioning "
           << (yes_part ? "YES" : "NO") << ", cover " << (yes_cover ? "YES" : "NO");
        err = os.str();
      }
      if (err.empty()) {
        auto parts = count_set_partitionings_by_size(sys, opts.cap);
        auto insts = set_partitioning_to_subset_sum_all(sys, t);
        for (int t0 = 1; t0 <= t && err.empty(); ++t0) {
          bool want = parts.get(t0) > 0;
          bool dp_ans = subset_sum_decide(insts[t0 - 1], SubsetSumMode::dp, opts.cap);
          bool brute_ans =
              subset_sum_decide(insts[t0 - 1], SubsetSumMode::brute, opts.cap);
          if (dp_ans != want || brute_ans != want) {
            std::ostringstream os;
            os << "subset-sum decision at t0=" << t0 << ": dp=" << dp_ans
               << " brute=" << brute_ans << " oracle=" << want;
            err = os.str();
          }
        }
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: vsp-circuit ----------------------------------------------------------------

void suite_vsp_circuit(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 50;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    int n = 1 + rng.below(8);
    int m = 1 + rng.below(6);
    int k = 1 + rng.below(std::min(n, 3));
    CnfFormula f = random_cnf(n, m, k, rng.next());
    std::string err;
    try {
      VspCircuit c = cnf_to_vsp_circuit(f);
      verify_vsp_labeling(c);
      if (circuit_count_sat(c, opts.cap) != count_satisfying(f, opts.cap))
        err = "circuit satisfying count differs from the formula count";
      else if (c.wire_count() > 4 * std::max(1, f.width()) * f.num_clauses()) {
        std::ostringstream os;
        os << "wire count " << c.wire_count() << " exceeds 4km = "
           << 4 * std::max(1, f.width()) * f.num_clauses();
        err = os.str();
      } else if (c.num_inputs() != n)
        err = "input count differs from the variable count";
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: roundtrip -------------------------------------------------------------------

template <class T>
std::string roundtrip_one(const T& inst, Format fmt) {
  std::string s1 = serialize(inst);
  Instance back;
  try {
    back = parse_instance(fmt, s1);
  } catch (const RedkitError& e) {
    return fmt_msg("serialized text failed to parse", e.what());
  }
  const T* p = std::get_if<T>(&back);
  if (!p) return "parsed to a different instance kind";
  if (!(*p == inst)) return "parsed instance differs structurally";
  if (serialize(*p) != s1) return "second serialization is not byte-identical";
  return {};
}

void suite_roundtrip(const SuiteOptions& opts, SuiteResult& result) {
  int cases = opts.cases > 0 ? opts.cases : 100;
  Rng rng(opts.seed);
  CaseRunner runner{result};
  for (int id = 0; id < cases; ++id) {
    std::string err;
    try {
      // cnf, with degenerate shapes sprinkled in
      if (id % 11 == 7) {
        err = roundtrip_one(make_cnf(1 + rng.below(4), {}), Format::dimacs_cnf);
        if (err.empty())
          err = roundtrip_one(make_cnf(2, {Clause{}, Clause{Lit{1, false}}}),
                              Format::dimacs_cnf);
      } else {
        int n = 1 + rng.below(8);
        err = roundtrip_one(random_cnf(n, 1 + rng.below(8),
                                       1 + rng.below(std::min(n, 3)), rng.next()),
                            Format::dimacs_cnf);
      }
      if (err.empty()) {
        SetSystem sys = [&] {
          int n = 1 + rng.below(8);
          int k = 1 + rng.below(std::min(n, 3));
          int m = std::min(1 + rng.below(8), max_distinct(n, k));
          SetSystem base = random_set_system(n, m, k, rng.next());
          if (id % 5 == 2) {  // duplicate a set; multiset flag makes it legal
            auto sets = base.sets;
            sets.push_back(sets.front());
            return make_set_system(n, std::move(sets), true);
          }
          if (id % 5 == 3) {  // include an empty set
            auto sets = base.sets;
            sets.push_back(Bits(n));
            return make_set_system(n, std::move(sets));
          }
          if (id % 17 == 5) return make_set_system(0, std::vector<Bits>{});
          return base;
        }();
        err = roundtrip_one(sys, Format::setsys);
      }
      if (err.empty()) {
        Graph g = [&] {
          if (id % 3 == 1) {
            Graph base = random_bipartite_graph(1 + rng.below(5), 1 + rng.below(5),
                                                0.5, rng.next());
            return base;
          }
          int nv = 1 + rng.below(8);
          int ne = std::min(rng.below(12), nv * (nv - 1) / 2);
          Graph base = random_graph(nv, ne, rng.next());
          if (id % 3 == 2) {
            Bits term(base.num_vertices);
            for (int v = 0; v < base.num_vertices; ++v)
              if (rng.coin()) term.set(v);
            if (id % 9 == 5) term = Bits(base.num_vertices);  // explicit empty set
            return make_graph(base.num_vertices, base.edges, term);
          }
          return base;
        }();
        err = roundtrip_one(g, Format::graph);
      }
      if (err.empty())
        err = roundtrip_one(random_subset_sum(1 + rng.below(8), 1 + rng.below(12),
                                              rng.next()),
                            Format::subsetsum);
      if (err.empty()) {
        int inputs = 1 + rng.below(4);
        err = roundtrip_one(random_circuit(inputs, 1 + rng.below(10), rng.next(),
                                           id % 2 == 0),
                            Format::circuit);
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id, err);
  }
}

// --- suite: bench-sanity ------------------------------------------------------------------

void suite_bench_sanity(const SuiteOptions& opts, SuiteResult& result) {
  CaseRunner runner{result};
  int id = 0;
  for (const char* target : {"setcover-dp", "cnf-brute"}) {
    std::string err;
    try {
      BenchResult br = run_bench(target, 10, 20, opts.seed);
      if (std::abs(br.slope - 1.0) > 0.2) {
        std::ostringstream os;
        os << target << " fitted exponent " << br.slope << " outside 1.0 +/- 0.2";
        err = os.str();
      }
    } catch (const RedkitError& e) {
      err = fmt_msg("unexpected error", e.what());
    }
    runner.finish(id++, err);
  }
}

// --- registry -------------------------------------------------------------------------------

struct SuiteEntry {
  const char* name;
  double budget_seconds;
  void (*fn)(const SuiteOptions&, SuiteResult&);
};

const SuiteEntry kSuites[] = {
    {"sattohit", 60, suite_sattohit},
    {"psattophit", 120, suite_psattophit},
    {"flip", 30, suite_flip},
    {"lucas", 1, suite_lucas},
    {"splitting-chain", 120, suite_splitting_chain},
    {"setcover-group", 60, suite_setcover_group},
    {"psetcover-pipeline", 300, suite_psetcover_pipeline},
    {"oddpartition", 5, suite_oddpartition},
    {"steiner", 120, suite_steiner},
    {"cvc", 180, suite_cvc},
    {"partitioning-subsetsum", 120, suite_partitioning_subsetsum},
    {"vsp-circuit", 30, suite_vsp_circuit},
    {"roundtrip", 10, suite_roundtrip},
    {"bench-sanity", 600, suite_bench_sanity},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const SuiteEntry& e : kSuites) v.push_back(e.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const SuiteEntry& entry : kSuites) {
    if (name != entry.name) continue;
    SuiteResult result;
    result.name = entry.name;
    result.seed = opts.seed;
    result.budget_seconds = entry.budget_seconds;
    auto start = std::chrono::steady_clock::now();
    entry.fn(opts, result);
    auto stop = std::chrono::steady_clock::now();
    result.seconds = std::chrono::duration<double>(stop - start).count();
    return result;
  }
  throw ParameterError("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts) {
  std::vector<SuiteResult> out;
  for (const SuiteEntry& entry : kSuites) out.push_back(run_suite(entry.name, opts));
  return out;
}

}  // namespace redkit
