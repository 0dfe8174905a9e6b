#include <algorithm>

#include <doctest.h>

#include "activesum/catalog.hpp"
#include "activesum/errors.hpp"
#include "activesum/gf.hpp"
#include "activesum/sl.hpp"

using namespace activesum;

TEST_CASE("field arithmetic tables") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    GF field(q);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(field.add(a, 0) == a);
      CHECK(field.mul(a, 1) == a);
      CHECK(field.add(a, field.neg(a)) == 0);
      for (unsigned b = 0; b < q; ++b) {
        CHECK(field.add(a, b) == field.add(b, a));
        CHECK(field.mul(a, b) == field.mul(b, a));
        for (unsigned c = 0; c < q; ++c)
          CHECK(field.mul(a, field.add(b, c)) ==
                field.add(field.mul(a, b), field.mul(a, c)));
      }
    }
    // The primitive element generates the multiplicative group.
    unsigned x = field.primitive_element(), count = 1;
    while (x != 1) {
      x = field.mul(x, field.primitive_element());
      ++count;
    }
    CHECK(count == q - 1);
  }
  CHECK_THROWS_AS(GF(6), UnsupportedParameters);
  CHECK_THROWS_AS(GF(9), UnsupportedParameters);
}

TEST_CASE("SL(3,2) acts on the 7 nonzero vectors with order 168") {
  auto r = sl_to_perm(3, 2);
  CHECK(r.group.degree() == 7);
  CHECK(r.order == 168);
  CHECK(r.group.order() == 168);
  CHECK(!r.generator_note.empty());
}

TEST_CASE("SL(2,2) is the symmetric group on the 3 nonzero vectors") {
  auto r = sl_to_perm(2, 2);
  CHECK(r.group.degree() == 3);
  CHECK(r.group.order() == 6);
  auto ours = r.group.elements(10);
  auto sym = symmetric_group(3).elements(10);
  std::sort(ours.begin(), ours.end());
  std::sort(sym.begin(), sym.end());
  CHECK(ours == sym);
}

TEST_CASE("SL(2,3) has degree 8 and order 24") {
  auto r = sl_to_perm(2, 3);
  CHECK(r.group.degree() == 8);
  CHECK(r.group.order() == 24);
}

TEST_CASE("orders match the product formula") {
  CHECK(sl_order_formula(2, 5) == 120);
  CHECK(sl_order_formula(3, 3) == 5616);
  CHECK(sl_order_formula(4, 2) == 20160);
  for (auto [n, q] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 5}, {2, 7}, {3, 3}, {4, 2}, {3, 8}}) {
    auto r = sl_to_perm(n, q);
    CHECK(r.group.order() == sl_order_formula(n, q));
  }
}

TEST_CASE("unsupported parameter combinations") {
  CHECK_THROWS_AS(sl_to_perm(5, 2), UnsupportedParameters);
  CHECK_THROWS_AS(sl_to_perm(2, 9), UnsupportedParameters);
  CHECK_THROWS_AS(sl_to_perm(4, 7), UnsupportedParameters); // degree too big
  // The standard pair cannot generate over a proper subfield situation.
  CHECK_THROWS_AS(sl_to_perm(2, 4), UnsupportedParameters);
  CHECK_THROWS_AS(sl_to_perm(2, 8), UnsupportedParameters);
  CHECK_THROWS_AS(sl_to_perm(3, 4), UnsupportedParameters);
}
