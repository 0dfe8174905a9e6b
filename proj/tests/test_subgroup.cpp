#include <doctest.h>

#include "activesum/catalog.hpp"
#include "activesum/errors.hpp"
#include "activesum/subgroup.hpp"

using namespace activesum;

TEST_CASE("generators must lie in the ambient group") {
  PermGroup a3 = alternating_group(3);
  CHECK_THROWS_AS(Subgroup(a3, {Perm::from_cycles("(0 1)", 3)}), MembershipError);
}

TEST_CASE("equality is equality of element sets") {
  PermGroup s3 = symmetric_group(3);
  Subgroup f1(s3, {Perm::from_cycles("(0 1 2)", 3)});
  Subgroup f2(s3, {Perm::from_cycles("(0 2 1)", 3)});
  CHECK(f1 == f2);
  CHECK(f1.key_hash() == f2.key_hash());

  Subgroup t(s3, {Perm::from_cycles("(0 1)", 3)});
  CHECK(!(f1 == t));
}

TEST_CASE("conjugation moves the element set") {
  PermGroup s3 = symmetric_group(3);
  Subgroup f(s3, {Perm::from_cycles("(0 1)", 3)});
  Subgroup conj = f.conjugated_by(Perm::from_cycles("(0 2)", 3));
  CHECK(conj == Subgroup(s3, {Perm::from_cycles("(1 2)", 3)}));
  CHECK(conj.order() == f.order());

  // A normal subgroup is fixed by every conjugation.
  Subgroup a3(s3, {Perm::from_cycles("(0 1 2)", 3)});
  for (const Perm &g : s3.elements(10))
    CHECK(a3.conjugated_by(g) == a3);
}

TEST_CASE("conjugation is a right action on subgroups") {
  PermGroup s4 = symmetric_group(4);
  Subgroup f(s4, {Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(2 3)", 4)});
  for (const Perm &g : s4.elements(30))
    for (const Perm &h :
         {Perm::from_cycles("(0 2)", 4), Perm::from_cycles("(1 2 3)", 4)})
      CHECK(f.conjugated_by(g).conjugated_by(h) == f.conjugated_by(g * h));
}

TEST_CASE("conjugating element must be ambient") {
  PermGroup a4 = alternating_group(4);
  Subgroup f(a4, {Perm::from_cycles("(0 1 2)", 4)});
  CHECK_THROWS_AS(f.conjugated_by(Perm::from_cycles("(0 1)", 4)),
                  MembershipError);
}

TEST_CASE("cyclicity and canonical generators") {
  PermGroup s4 = symmetric_group(4);
  Subgroup c4(s4, {Perm::from_cycles("(0 1 2 3)", 4)});
  CHECK(c4.is_cyclic());
  CHECK(c4.cyclic_generator().order() == 4);

  Subgroup v4(s4, {Perm::from_cycles("(0 1)(2 3)", 4),
                   Perm::from_cycles("(0 2)(1 3)", 4)});
  CHECK(v4.order() == 4);
  CHECK(!v4.is_cyclic());
  CHECK_THROWS_AS(v4.cyclic_generator(), EncodingError);

  // The canonical generator is stable under regenerating the subgroup.
  Subgroup c4b(s4, {Perm::from_cycles("(0 3 2 1)", 4)});
  CHECK(c4.cyclic_generator() == c4b.cyclic_generator());
}

TEST_CASE("beyond the key cutoff equality falls back to membership") {
  PermGroup s5 = symmetric_group(5);
  Subgroup a(s5, symmetric_group(5).generators(), 10); // order 120 > cutoff
  Subgroup b(s5, {Perm::from_cycles("(0 1)", 5), Perm::from_cycles("(1 2)", 5),
                  Perm::from_cycles("(2 3)", 5), Perm::from_cycles("(3 4)", 5)},
             10);
  CHECK(a.key() == nullptr);
  CHECK(a == b);
  Subgroup alt(s5, alternating_group(5).generators(), 10);
  CHECK(!(a == alt));
  CHECK_THROWS_AS(a.elements(), CutoffExceeded);
}

TEST_CASE("exponent of a subgroup") {
  PermGroup s4 = symmetric_group(4);
  Subgroup v4(s4, {Perm::from_cycles("(0 1)(2 3)", 4),
                   Perm::from_cycles("(0 2)(1 3)", 4)});
  CHECK(v4.exponent() == 2);
  Subgroup whole(s4, s4.generators());
  CHECK(whole.exponent() == 12);
}
