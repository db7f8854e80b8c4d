#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "redkit/errors.hpp"

namespace redkit {

// Subset of a fixed universe [0, nbits). One machine word covers every
// desk-scale universe; larger universes fall back to more words.
class Bits {
 public:
  Bits() = default;

  explicit Bits(int nbits) : nbits_(check_size(nbits)), w_(words_for(nbits), 0) {}

  static Bits of(int nbits, std::initializer_list<int> elems) {
    Bits b(nbits);
    for (int e : elems) b.set(e);
    return b;
  }

  static Bits from_elements(int nbits, const std::vector<int>& elems) {
    Bits b(nbits);
    for (int e : elems) b.set(e);
    return b;
  }

  static Bits full(int nbits) {
    Bits b(nbits);
    for (auto& w : b.w_) w = ~uint64_t{0};
    b.trim();
    return b;
  }

  int size_bits() const { return nbits_; }

  bool test(int i) const {
    range_check(i);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    range_check(i);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    range_check(i);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : w_) if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  bool intersects(const Bits& o) const {
    size_t k = std::min(w_.size(), o.w_.size());
    for (size_t i = 0; i < k; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t ow = i < o.w_.size() ? o.w_[i] : 0;
      if (w_[i] & ~ow) return false;
    }
    return true;
  }

  Bits& operator|=(const Bits& o) {
    same_universe(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  Bits& operator&=(const Bits& o) {
    same_universe(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  // Complement within the universe.
  Bits complement() const {
    Bits r(nbits_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  // Same bits over a universe of new_nbits >= nbits.
  Bits widened(int new_nbits) const {
    if (new_nbits < nbits_) throw StructuralError("cannot narrow a bit set");
    Bits r(new_nbits);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i];
    return r;
  }

  uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        out.push_back(int(i * 64) + __builtin_ctzll(w));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

  // Numeric-value order (zero-extended), then universe size. Gives the
  // canonical "ascending mask value" order within one system.
  bool operator<(const Bits& o) const {
    size_t k = std::max(w_.size(), o.w_.size());
    for (size_t i = k; i-- > 0;) {
      uint64_t a = i < w_.size() ? w_[i] : 0;
      uint64_t b = i < o.w_.size() ? o.w_[i] : 0;
      if (a != b) return a < b;
    }
    return nbits_ < o.nbits_;
  }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;

  static int check_size(int nbits) {
    if (nbits < 0) throw StructuralError("negative universe size");
    return nbits;
  }

  static size_t words_for(int nbits) { return size_t(nbits + 63) / 64; }

  void range_check(int i) const {
    if (i < 0 || i >= nbits_) throw StructuralError("bit index out of range");
  }

  void same_universe(const Bits& o) const {
    if (nbits_ != o.nbits_) throw StructuralError("bit set universe mismatch");
  }

  void trim() {
    int rem = nbits_ & 63;
    if (rem && !w_.empty()) w_.back() &= (uint64_t{1} << rem) - 1;
  }
};

}  // namespace redkit
