#pragma once

#include <gmpxx.h>

#include <vector>

namespace redkit {

// Bit positions set in the binary expansion of a nonnegative integer.
struct OnesSet {
  std::vector<int> positions;  // strictly increasing

  mpz_class reconstruct() const;
  bool contains(const OnesSet& other) const;  // other.positions subset of positions
};

OnesSet ones(const mpz_class& x);

// C(a,b) mod 2. Equals 1 iff ones(b) is a subset of ones(a).
int binom_parity(const mpz_class& a, const mpz_class& b);

// Exact C(a,b) for 0 <= b <= a <= 10^4.
mpz_class big_binom(unsigned long a, unsigned long b);

// Parity of C(C(i,q), t_star): the inner binomial is computed exactly, the
// outer one mod 2. t_star larger than C(i,q) yields 0.
int nested_binom_parity(unsigned long i, unsigned long q, const mpz_class& t_star);

}  // namespace redkit
