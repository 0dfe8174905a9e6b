#include <algorithm>
#include <set>

#include <doctest.h>

#include "activesum/catalog.hpp"
#include "activesum/errors.hpp"
#include "activesum/perm_group.hpp"
#include "activesum/sl.hpp"

using namespace activesum;

namespace {

// Independent order oracle: plain closure under multiplication, no BSGS.
std::set<Perm> closure(const PermGroup &G) {
  std::set<Perm> seen{Perm(G.degree())};
  std::vector<Perm> queue{Perm(G.degree())};
  while (!queue.empty()) {
    Perm current = queue.back();
    queue.pop_back();
    for (const Perm &g : G.generators()) {
      Perm next = current * g;
      if (seen.insert(next).second)
        queue.push_back(next);
    }
  }
  return seen;
}

} // namespace

TEST_CASE("order of S3 from generators") {
  PermGroup G(3, {Perm::from_cycles("(0 1)", 3), Perm::from_cycles("(0 1 2)", 3)});
  CHECK(closure(G).size() == 6);
  CHECK(G.order() == 6);
}

TEST_CASE("order of the trivial group and a 4-cycle") {
  CHECK(PermGroup(1, {}).order() == 1);
  CHECK(PermGroup(4, {Perm::from_cycles("(0 1 2 3)", 4)}).order() == 4);
}

TEST_CASE("BSGS order and membership agree with exhaustive closure") {
  std::vector<PermGroup> groups = {
      symmetric_group(4),     symmetric_group(5),   symmetric_group(6),
      alternating_group(4),   alternating_group(5), dihedral_group(7),
      quaternion_group(),     cyclic_group(12),     sl_to_perm(2, 3).group,
      sl_to_perm(2, 7).group, sl_to_perm(3, 2).group,
      klein_four_group(),     direct_product(dihedral_group(4), cyclic_group(3)),
  };
  for (const PermGroup &G : groups) {
    auto all = closure(G);
    REQUIRE(all.size() <= 5000);
    CHECK(G.order() == all.size());
    for (const Perm &x : all)
      CHECK(G.contains(x));
    // Non-members of the full symmetric group must fail the sift.
    if (all.size() < 100 && G.degree() <= 5) {
      std::uint64_t misses = 0;
      std::set<Perm> universe = closure(symmetric_group(G.degree()));
      for (const Perm &x : universe)
        if (!all.count(x)) {
          CHECK(!G.contains(x));
          if (++misses > 50)
            break;
        }
    }
  }
}

TEST_CASE("element order and membership errors") {
  PermGroup s3 = symmetric_group(3);
  CHECK(element_order(s3, Perm::from_cycles("(0 1 2)", 3)) == 3);
  CHECK(element_order(s3, Perm(3)) == 1);
  PermGroup s5 = symmetric_group(5);
  CHECK(element_order(s5, Perm::from_cycles("(0 1)(2 3 4)", 5)) == 6);

  PermGroup a3 = alternating_group(3);
  CHECK_THROWS_AS(element_order(a3, Perm::from_cycles("(0 1)", 3)),
                  MembershipError);
}

TEST_CASE("exponent") {
  // Oracle: explicit lcm over the closure.
  PermGroup s3 = symmetric_group(3);
  std::uint64_t expected = 1;
  for (const Perm &x : closure(s3))
    expected = lcm_u64(expected, x.order());
  CHECK(expected == 6);
  CHECK(exponent(s3) == 6);

  CHECK(exponent(PermGroup(2, {Perm::from_cycles("(0 1)", 2)})) == 2);
  CHECK(exponent(klein_four_group()) == 2);
  CHECK(exponent(quaternion_group()) == 4);
}

TEST_CASE("torsion sets") {
  PermGroup s3 = symmetric_group(3);

  // Oracle: filter the closure by hand.
  std::uint64_t involutions = 0;
  for (const Perm &x : closure(s3))
    if ((x * x).is_identity())
      ++involutions;
  CHECK(involutions == 4);

  CHECK(torsion_set(s3, 2).size() == 4);
  CHECK(torsion_set(s3, 1).size() == 1);
  CHECK(torsion_set(s3, 1).elements[0].is_identity());
  CHECK(torsion_set(cyclic_group(6), 3).size() == 3);

  SUBCASE("conjugation stability and divisor monotonicity") {
    for (const PermGroup &G : {symmetric_group(4), quaternion_group(),
                               alternating_group(4), dihedral_group(6)}) {
      for (std::uint64_t n : {2, 3, 4, 6, 12}) {
        auto torsion = torsion_set(G, n);
        std::set<Perm> as_set(torsion.elements.begin(), torsion.elements.end());
        CHECK(as_set.count(Perm(G.degree())) == 1);
        for (const Perm &x : torsion.elements) {
          CHECK(as_set.count(x.inverse()) == 1);
          for (const Perm &g : G.elements(5000))
            CHECK(as_set.count(x.conjugated_by(g)) == 1);
        }
        for (std::uint64_t m : {1ull, 2ull, 3ull}) {
          if (n % m != 0)
            continue;
          for (const Perm &x : torsion_set(G, m).elements)
            CHECK(as_set.count(x) == 1);
        }
      }
    }
  }
}

TEST_CASE("hom set sizes through torsion") {
  CHECK(hom_set_size(6, symmetric_group(3)) == 6);
  CHECK(hom_set_size(1, symmetric_group(4)) == 1);
  CHECK(hom_set_size(2, cyclic_group(3)) == 1);
}

TEST_CASE("element listing obeys its cutoff") {
  CHECK_THROWS_AS(symmetric_group(5).elements(100), CutoffExceeded);
  CHECK(symmetric_group(5).elements(120).size() == 120);
}

TEST_CASE("generated subgroup filters redundant generators") {
  PermGroup s4 = symmetric_group(4);
  auto all = s4.elements(30);
  PermGroup H = generated_subgroup(4, all);
  CHECK(H.order() == 24);
  CHECK(H.generators().size() <= 4);
}
