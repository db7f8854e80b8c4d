#include "redkit/reductions_branch.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "redkit/errors.hpp"
#include "redkit/parity_math.hpp"

namespace redkit {

namespace {

int ceil_log2(int x) {
  int b = 0;
  while ((1 << b) < x) ++b;
  return b;
}

mpz_class binom_or_zero(int a, int b) {
  if (b < 0 || b > a) return 0;
  return big_binom(a, b);
}

// All r-subsets of {base, ..., base+width-1} as Bits over `universe`.
std::vector<Bits> block_subsets(int universe, int base, int width, int r) {
  std::vector<Bits> out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > width) return out;
  for (;;) {
    Bits b(universe);
    for (int i : idx) b.set(base + i);
    out.push_back(std::move(b));
    int pos = r - 1;
    while (pos >= 0 && idx[pos] == width - r + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

}  // namespace

Bits BlockCode::encode(uint64_t value) const {
  if (value >= (uint64_t(1) << p)) throw ParameterError("block value out of range");
  Bits b(p_prime);
  mpz_class rank(static_cast<unsigned long>(value));
  int x = 0;
  for (int pos = 0; pos < image_size; ++pos) {
    for (;;) {
      if (x >= p_prime) throw StructuralError("subset unranking overran the block");
      mpz_class below = binom_or_zero(p_prime - 1 - x, image_size - 1 - pos);
      if (rank < below) {
        b.set(x);
        ++x;
        break;
      }
      rank -= below;
      ++x;
    }
  }
  return b;
}

std::optional<uint64_t> BlockCode::decode(const Bits& image) const {
  if (image.size_bits() != p_prime || image.count() != image_size) return std::nullopt;
  mpz_class rank = 0;
  auto elems = image.elements();
  int prev = -1;
  for (int pos = 0; pos < image_size; ++pos) {
    for (int x = prev + 1; x < elems[pos]; ++x)
      rank += binom_or_zero(p_prime - 1 - x, image_size - 1 - pos);
    prev = elems[pos];
  }
  if (rank >= (uint64_t(1) << p)) return std::nullopt;
  return rank.get_ui();
}

BlockCode make_block_code(int p) {
  if (p < 3 || p % 2 == 0) throw ParameterError("block size must be odd and >= 3");
  BlockCode code;
  code.p = p;
  code.p_prime = p + 2 * ceil_log2(p);
  code.image_size = (code.p_prime + 1) / 2;
  mpz_class capacity = big_binom(code.p_prime, code.image_size);
  mpz_class needed = 1;
  mpz_mul_2exp(needed.get_mpz_t(), needed.get_mpz_t(), p);
  if (capacity < needed) throw StructuralError("block image space too small");
  return code;
}

CnfFormula pad_to_multiple(const CnfFormula& f, int p) {
  if (p < 1) throw ParameterError("padding modulus must be positive");
  int extra = (p - f.num_vars % p) % p;
  return make_cnf(f.num_vars + extra, f.clauses);
}

namespace {

// Per-clause step 7: every tuple of per-block falsifying-assignment complements.
void add_clause_sets(const CnfFormula& f, const BlockCode& code, int universe,
                     const Clause& clause, std::set<Bits>& out) {
  int p = code.p;
  std::map<int, std::vector<Lit>> by_block;
  for (const Lit& l : clause) by_block[l.var / p].push_back(l);

  std::vector<std::vector<Bits>> choices;  // per block: complements of falsifying images
  mpz_class tuple_count = 1;
  for (const auto& [block, lits] : by_block) {
    std::vector<Bits> alts;
    for (uint64_t a = 0; a < (uint64_t(1) << p); ++a) {
      bool falsifies = true;
      for (const Lit& l : lits) {
        bool value = (a >> (l.var - block * p)) & 1;
        if (value == l.positive) {
          falsifies = false;
          break;
        }
      }
      if (!falsifies) continue;
      Bits img = code.encode(a);
      Bits comp = img.complement();  // within the p'-element block
      Bits placed(universe);
      for (int e : comp.elements()) placed.set(block * code.p_prime + e);
      alts.push_back(std::move(placed));
    }
    tuple_count *= (unsigned long)alts.size();
    choices.push_back(std::move(alts));
  }

  mpz_class guard = 1;
  mpz_mul_2exp(guard.get_mpz_t(), guard.get_mpz_t(),
               (unsigned long)(f.width() * code.p_prime));
  if (tuple_count > guard)
    throw StructuralError("clause tuple enumeration exceeds the 2^(k p') guard");

  std::vector<size_t> pick(choices.size(), 0);
  for (;;) {
    Bits u(universe);
    for (size_t i = 0; i < choices.size(); ++i) u |= choices[i][pick[i]];
    out.insert(std::move(u));
    size_t level = 0;
    while (level < choices.size()) {
      if (++pick[level] < choices[level].size()) break;
      pick[level] = 0;
      ++level;
    }
    if (level == choices.size()) break;
  }
}

std::set<Bits> base_hitting_family(const CnfFormula& f, const BlockCode& code,
                                   int num_blocks, int universe) {
  std::set<Bits> family;
  int pp = code.p_prime;
  int r = code.image_size;
  for (int i = 0; i < num_blocks; ++i) {
    for (Bits& b : block_subsets(universe, i * pp, pp, r)) family.insert(std::move(b));
    for (Bits& b : block_subsets(universe, i * pp, pp, pp - r)) {
      Bits local(pp);
      for (int e = 0; e < pp; ++e)
        if (!b.test(i * pp + e)) local.set(e);
      if (!code.decode(local)) family.insert(std::move(b));
    }
  }
  for (const Clause& c : f.clauses) add_clause_sets(f, code, universe, c, family);
  return family;
}

}  // namespace

HittingSetInstance cnf_to_hitting_set(const CnfFormula& f, int p) {
  BlockCode code = make_block_code(p);
  if (f.num_vars % p != 0)
    throw ParameterError("variable count not divisible by the block size; pad first");
  int g = f.num_vars / p;
  int universe = g * code.p_prime;
  std::set<Bits> family = base_hitting_family(f, code, g, universe);
  HittingSetInstance inst;
  inst.system = make_set_system(universe,
                                std::vector<Bits>(family.begin(), family.end()));
  inst.target = code.image_size * g;
  return inst;
}

SetSystem cnf_to_parity_hitting_set(const CnfFormula& f, int p) {
  BlockCode code = make_block_code(p);
  if (f.num_vars % p != 0)
    throw ParameterError("variable count not divisible by the block size; pad first");
  int g = f.num_vars / p;
  int pp = code.p_prime;
  int universe = g * pp;
  int wide = universe + g;  // one toggle element per block, appended
  std::set<Bits> family;
  for (const Bits& b : base_hitting_family(f, code, g, universe))
    family.insert(b.widened(wide));
  for (int i = 0; i < g; ++i)
    for (Bits& b : block_subsets(wide, i * pp, pp, pp - code.image_size)) {
      b.set(universe + i);
      family.insert(std::move(b));
    }
  return make_set_system(wide, std::vector<Bits>(family.begin(), family.end()));
}

std::vector<SetSystem> hitting_set_to_set_splitting(const HittingSetInstance& inst, int p) {
  if (p < 1) throw ParameterError("block size must be positive");
  int n = inst.system.universe_size;
  int t = inst.target;
  if (t > n) throw ParameterError("target exceeds universe size");
  if (t < 0) throw ParameterError("negative target");
  int n_pad = (n + p - 1) / p * p;
  int g = n_pad / p;
  int red = n_pad, blue = n_pad + 1;
  int universe = n_pad + 2;

  std::vector<std::vector<int>> compositions;
  std::vector<int> cur(g, 0);
  auto rec = [&](auto&& self, int block, int remaining) -> void {
    if (block == g) {
      if (remaining == 0) compositions.push_back(cur);
      return;
    }
    int lo = std::max(0, remaining - (g - block - 1) * p);
    int hi = std::min(p, remaining);
    for (int v = lo; v <= hi; ++v) {
      cur[block] = v;
      self(self, block + 1, remaining - v);
    }
  };
  if (g == 0) {
    if (t == 0) compositions.push_back({});
  } else {
    rec(rec, 0, t);
  }

  std::vector<SetSystem> outputs;
  outputs.reserve(compositions.size());
  for (const auto& comp : compositions) {
    std::vector<Bits> sets;
    Bits rb(universe);
    rb.set(red);
    rb.set(blue);
    sets.push_back(std::move(rb));
    for (int i = 0; i < g; ++i)
      for (Bits& b : block_subsets(universe, i * p, p, comp[i] + 1)) {
        b.set(red);
        sets.push_back(std::move(b));
      }
    for (const Bits& s : inst.system.sets) {
      Bits b = s.widened(universe);
      b.set(blue);
      sets.push_back(std::move(b));
    }
    outputs.push_back(make_set_system(universe, std::move(sets)));
  }
  return outputs;
}

CnfFormula set_splitting_to_nae_cnf(const SetSystem& sys) {
  std::vector<Clause> clauses;
  clauses.reserve(sys.sets.size());
  for (const Bits& s : sys.sets) {
    Clause c;
    for (int e : s.elements()) c.push_back(Lit{e, true});
    clauses.push_back(std::move(c));
  }
  return make_cnf(sys.universe_size, std::move(clauses));
}

CnfFormula nae_to_cnf(const CnfFormula& f) {
  std::vector<Clause> clauses;
  clauses.reserve(2 * f.clauses.size());
  for (const Clause& c : f.clauses) {
    clauses.push_back(c);
    Clause flipped;
    for (const Lit& l : c) flipped.push_back(Lit{l.var, !l.positive});
    clauses.push_back(std::move(flipped));
  }
  return make_cnf(f.num_vars, std::move(clauses));
}

CnfFormula hitting_set_to_monotone_cnf(const SetSystem& sys) {
  return set_splitting_to_nae_cnf(sys);
}

namespace {

struct CircuitBuilder {
  std::vector<Gate> gates;
  std::vector<long long> labels;

  int add(GateKind kind, std::vector<int> in, long long label) {
    gates.push_back(Gate{kind, std::move(in)});
    labels.push_back(label);
    return int(gates.size()) - 1;
  }
};

}  // namespace

VspCircuit cnf_to_vsp_circuit(const CnfFormula& f) {
  if (f.num_vars < 1) throw ParameterError("circuit construction needs >= 1 variable");
  CircuitBuilder b;
  for (int i = 0; i < f.num_vars; ++i) b.add(GateKind::input, {}, 0);

  int m = f.num_clauses();
  if (m == 0) {
    int pos = b.add(GateKind::or_gate, {0}, 1);
    int neg = b.add(GateKind::not_gate, {0}, 1);
    int out = b.add(GateKind::or_gate, {pos, neg}, 2);
    return make_circuit(std::move(b.gates), out, std::move(b.labels));
  }

  int k = std::max(1, f.width());
  long long out_label = k + 1;
  std::vector<int> clause_gates;
  clause_gates.reserve(m);
  for (const Clause& c : f.clauses) {
    int value;
    long long level;
    if (c.empty()) {
      int pos = b.add(GateKind::or_gate, {0}, 1);
      int neg = b.add(GateKind::not_gate, {0}, 1);
      value = b.add(GateKind::and_gate, {pos, neg}, 2);
      level = 2;
    } else {
      std::vector<int> lits;
      for (const Lit& l : c)
        lits.push_back(b.add(l.positive ? GateKind::or_gate : GateKind::not_gate,
                             {l.var}, 1));
      if (lits.size() == 1) {
        value = b.add(GateKind::or_gate, {lits[0]}, 2);
      } else {
        value = b.add(GateKind::or_gate, {lits[0], lits[1]}, 2);
        for (size_t i = 2; i < lits.size(); ++i)
          value = b.add(GateKind::or_gate, {value, lits[i]}, (long long)i + 1);
      }
      level = std::max<long long>(2, (long long)lits.size());
    }
    while (level < out_label) {
      ++level;
      value = b.add(GateKind::or_gate, {value}, level);
    }
    clause_gates.push_back(value);
  }

  int out = clause_gates[0];
  for (int j = 1; j < m; ++j)
    out = b.add(GateKind::and_gate, {out, clause_gates[j]}, out_label + j);
  return make_circuit(std::move(b.gates), out, std::move(b.labels));
}

bool verify_vsp_labeling(const VspCircuit& c) {
  if (!c.labels) throw ParameterError("circuit carries no labeling");
  const auto& l = *c.labels;
  std::vector<int> out_degree(c.gates.size(), 0);
  std::vector<std::pair<long long, long long>> wires;
  for (size_t v = 0; v < c.gates.size(); ++v) {
    const Gate& g = c.gates[v];
    if (g.kind == GateKind::input && l[v] != 0) return false;
    for (int u : g.in) {
      if (l[u] >= l[v]) return false;
      ++out_degree[u];
      wires.emplace_back(l[u], l[v]);
    }
  }
  std::optional<long long> sink_label;
  for (size_t v = 0; v < c.gates.size(); ++v) {
    if (out_degree[v] > 0 || c.gates[v].kind == GateKind::input) continue;
    if (sink_label && *sink_label != l[v]) return false;
    sink_label = l[v];
  }
  for (const auto& [a, bnd] : wires)
    for (const auto& [a2, bnd2] : wires)
      if (a < a2 && a2 < bnd && bnd < bnd2) return false;
  return true;
}

}  // namespace redkit
