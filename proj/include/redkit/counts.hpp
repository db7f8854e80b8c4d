#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>

namespace redkit {

// Solution counts indexed by solution size. Absent keys mean zero.
struct SizeIndexedCounts {
  std::map<int, mpz_class> counts;

  mpz_class get(int size) const {
    auto it = counts.find(size);
    return it == counts.end() ? mpz_class(0) : it->second;
  }

  void add(int size, const mpz_class& v = 1) {
    if (v == 0) return;
    auto [it, fresh] = counts.emplace(size, v);
    if (!fresh) it->second += v;
  }

  mpz_class total() const {
    mpz_class t = 0;
    for (const auto& [s, c] : counts) t += c;
    return t;
  }

  int parity_total() const { return mpz_odd_p(total().get_mpz_t()) ? 1 : 0; }

  std::optional<int> min_nonzero() const {
    for (const auto& [s, c] : counts)
      if (c > 0) return s;
    return std::nullopt;
  }

  bool operator==(const SizeIndexedCounts&) const = default;
};

}  // namespace redkit
