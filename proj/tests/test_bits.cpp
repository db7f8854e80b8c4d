#include "doctest.h"

#include "redkit/bits.hpp"
#include "redkit/counts.hpp"
#include "redkit/errors.hpp"

using namespace redkit;

TEST_CASE("bits construction and element access") {
  Bits b(10);
  CHECK(b.size_bits() == 10);
  CHECK(b.none());
  CHECK(b.count() == 0);

  b.set(0);
  b.set(7);
  b.set(9);
  CHECK(b.test(0));
  CHECK(b.test(7));
  CHECK(b.test(9));
  CHECK_FALSE(b.test(1));
  CHECK(b.count() == 3);
  CHECK(b.any());
  CHECK(b.elements() == std::vector<int>{0, 7, 9});

  b.reset(7);
  CHECK_FALSE(b.test(7));
  CHECK(b.count() == 2);
}

TEST_CASE("bits factories agree") {
  Bits a = Bits::of(6, {1, 4});
  Bits b = Bits::from_elements(6, {4, 1});
  CHECK(a == b);
  CHECK(a.low_word() == 0b10010u);

  Bits f = Bits::full(6);
  CHECK(f.count() == 6);
  CHECK(f.low_word() == 0b111111u);
  CHECK(Bits::full(0).count() == 0);
}

TEST_CASE("bits multiword universes") {
  Bits b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.elements() == std::vector<int>{0, 64, 129});
  CHECK(Bits::full(130).count() == 130);
  CHECK(b.complement().count() == 127);
}

TEST_CASE("bits set algebra") {
  Bits a = Bits::of(5, {0, 2});
  Bits b = Bits::of(5, {2, 3});
  CHECK((a | b) == Bits::of(5, {0, 2, 3}));
  CHECK((a & b) == Bits::of(5, {2}));
  CHECK(a.intersects(b));
  CHECK_FALSE(Bits::of(5, {0}).intersects(Bits::of(5, {1})));

  CHECK(Bits::of(5, {2}).subset_of(b));
  CHECK_FALSE(b.subset_of(a));
  CHECK(Bits(5).subset_of(a));

  CHECK(a.complement() == Bits::of(5, {1, 3, 4}));
  CHECK(a.complement().complement() == a);
}

TEST_CASE("bits widening preserves elements") {
  Bits a = Bits::of(4, {1, 3});
  Bits w = a.widened(70);
  CHECK(w.size_bits() == 70);
  CHECK(w.elements() == a.elements());
  CHECK_THROWS_AS(a.widened(3), StructuralError);
}

TEST_CASE("bits ordering is by mask value") {
  Bits a = Bits::of(4, {0, 1});  // mask 3
  Bits b = Bits::of(4, {2});     // mask 4
  Bits c = Bits::of(4, {0, 2});  // mask 5
  CHECK(a < b);
  CHECK(b < c);
  CHECK_FALSE(c < a);
  // Equal masks over different universe sizes order by universe.
  CHECK(Bits::of(3, {1}) < Bits::of(4, {1}));
}

TEST_CASE("bits guards") {
  CHECK_THROWS_AS(Bits(-1), StructuralError);
  Bits b(3);
  CHECK_THROWS_AS(b.set(3), StructuralError);
  CHECK_THROWS_AS(b.test(-1), StructuralError);
  CHECK_THROWS_AS((void)(Bits(3) | Bits(4)), StructuralError);
}

TEST_CASE("size indexed counts") {
  SizeIndexedCounts c;
  CHECK(c.total() == 0);
  CHECK(c.parity_total() == 0);
  CHECK_FALSE(c.min_nonzero().has_value());
  CHECK(c.get(5) == 0);

  c.add(2, 3);
  c.add(2, 1);
  c.add(5, 2);
  c.add(7, 0);  // zero increments leave no key behind
  CHECK(c.get(2) == 4);
  CHECK(c.get(5) == 2);
  CHECK(c.counts.count(7) == 0);
  CHECK(c.total() == 6);
  CHECK(c.parity_total() == 0);
  CHECK(c.min_nonzero() == 2);

  c.add(1, 1);
  CHECK(c.total() == 7);
  CHECK(c.parity_total() == 1);
  CHECK(c.min_nonzero() == 1);
}
