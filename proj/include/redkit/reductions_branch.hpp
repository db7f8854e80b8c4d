#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "redkit/bits.hpp"
#include "redkit/instances.hpp"

namespace redkit {

// Injective encoding of the 2^p assignments of a p-variable block as
// ceil(p'/2)-subsets of a p'-element block, p' = p + 2*ceil(log2 p).
// Assignment value v maps to the v-th subset in lexicographic order.
struct BlockCode {
  int p = 0;
  int p_prime = 0;
  int image_size = 0;  // ceil(p_prime / 2)

  Bits encode(uint64_t value) const;                      // value < 2^p
  std::optional<uint64_t> decode(const Bits& image) const;  // inverse where defined
};

BlockCode make_block_code(int p);

struct HittingSetInstance {
  SetSystem system;
  int target = 0;
};

// Fresh unconstrained variables up to the next multiple of p; multiplies the
// satisfying-assignment count by 2^(added variables).
CnfFormula pad_to_multiple(const CnfFormula& f, int p);

// #SAT(f) = number of hitting sets of size exactly `target` in the output.
HittingSetInstance cnf_to_hitting_set(const CnfFormula& f, int p);

// Parity of the total hitting-set count of the output = parity of #SAT(f).
SetSystem cnf_to_parity_hitting_set(const CnfFormula& f, int p);

// One output per composition (t_1..t_g) of t with 0 <= t_i <= p; the input has
// a hitting set of size <= t iff at least one output admits a set splitting.
// The two highest output indices are the red/blue special elements.
std::vector<SetSystem> hitting_set_to_set_splitting(const HittingSetInstance& inst, int p);

// Monotone formula, one clause per set; NAE count = splitting count. An empty
// set becomes an empty clause, making the output trivially NAE-unsatisfiable.
CnfFormula set_splitting_to_nae_cnf(const SetSystem& sys);

// Each clause plus its sign-flipped copy; satisfying assignments of the output
// are exactly the NAE assignments of the input.
CnfFormula nae_to_cnf(const CnfFormula& f);

// Parsimonious: #SAT(output) = total hitting-set count. An empty set becomes
// an empty clause (trivially unsatisfiable).
CnfFormula hitting_set_to_monotone_cnf(const SetSystem& sys);

// Equivalent fan-in-<=2 circuit with an attached labeling accepted by
// verify_vsp_labeling; wire count <= 4*max(1,k)*m for formulas whose clauses
// are all nonempty.
VspCircuit cnf_to_vsp_circuit(const CnfFormula& f);

// True iff labels increase along every wire, inputs are labeled 0, all
// non-input sinks share one label, and no two wires (u,v),(u',v') satisfy
// l(u) < l(u') < l(v) < l(v').
bool verify_vsp_labeling(const VspCircuit& c);

}  // namespace redkit
