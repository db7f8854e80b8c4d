#include "redkit/parity_math.hpp"

#include <algorithm>

#include "redkit/errors.hpp"

namespace redkit {

mpz_class OnesSet::reconstruct() const {
  mpz_class x = 0;
  for (int p : positions) mpz_setbit(x.get_mpz_t(), p);
  return x;
}

bool OnesSet::contains(const OnesSet& other) const {
  return std::includes(positions.begin(), positions.end(), other.positions.begin(),
                       other.positions.end());
}

OnesSet ones(const mpz_class& x) {
  if (x < 0) throw ParameterError("ones requires a nonnegative integer");
  OnesSet out;
  mp_bitcnt_t pos = mpz_scan1(x.get_mpz_t(), 0);
  while (pos != mp_bitcnt_t(-1)) {
    out.positions.push_back(int(pos));
    pos = mpz_scan1(x.get_mpz_t(), pos + 1);
  }
  return out;
}

int binom_parity(const mpz_class& a, const mpz_class& b) {
  if (b < 0 || a < 0) throw ParameterError("binom_parity requires nonnegative arguments");
  if (b > a) throw ParameterError("binom_parity requires b <= a");
  mpz_class conj = a & b;
  return conj == b ? 1 : 0;
}

mpz_class big_binom(unsigned long a, unsigned long b) {
  if (a > 10000) throw ParameterError("big_binom supports a <= 10^4");
  if (b > a) throw ParameterError("big_binom requires b <= a");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

int nested_binom_parity(unsigned long i, unsigned long q, const mpz_class& t_star) {
  if (t_star < 0) throw ParameterError("nested_binom_parity requires t_star >= 0");
  if (q > i) return t_star == 0 ? 1 : 0;  // C(i,q) = 0, and C(0,0) = 1
  mpz_class inner = big_binom(i, q);
  if (t_star > inner) return 0;
  return binom_parity(inner, t_star);
}

}  // namespace redkit
