#include <set>

#include <doctest.h>

#include "activesum/catalog.hpp"
#include "activesum/cellularity.hpp"
#include "activesum/errors.hpp"

using namespace activesum;

namespace {

Homomorphism projection_c6_c3() {
  PermGroup c6 = cyclic_group(6);
  PermGroup c3 = cyclic_group(3);
  return Homomorphism::checked_by_table(c6, c3, {c3.generators()[0]});
}

Homomorphism inclusion_a3_s3() {
  return Homomorphism::checked_by_table(alternating_group(3), symmetric_group(3),
                                        {Perm::from_cycles("(0 1 2)", 3)});
}

Homomorphism identity_on(const PermGroup &G) {
  return Homomorphism::checked_by_table(G, G, G.generators());
}

// Brute-force route through explicit Hom sets: composition with f must be a
// bijection Hom(C_n, X) -> Hom(C_n, Y).
bool equivalence_by_hom_sets(const Homomorphism &f, std::uint64_t n) {
  PermGroup cn = cyclic_group(static_cast<unsigned>(n));
  auto hom_x = enumerate_homs(cn, f.source());
  auto hom_y = enumerate_homs(cn, f.target());

  std::set<std::vector<Perm>> composed;
  for (const Homomorphism &h : hom_x) {
    std::vector<Perm> tuple;
    for (const Perm &im : h.generator_images())
      tuple.push_back(f.evaluate(im));
    composed.insert(tuple);
  }
  if (composed.size() != hom_x.size())
    return false;
  std::set<std::vector<Perm>> all_y;
  for (const Homomorphism &h : hom_y)
    all_y.insert(h.generator_images());
  return composed == all_y;
}

} // namespace

TEST_CASE("identity maps are equivalences") {
  CHECK(is_cn_equivalence(identity_on(cyclic_group(2)), 2));
  CHECK(is_cn_equivalence(identity_on(symmetric_group(4)), 6));
}

TEST_CASE("the projection C6 -> C3") {
  Homomorphism f = projection_c6_c3();
  CHECK(!is_cn_equivalence(f, 2)); // both square roots of 1 map to 1
  CHECK(is_cn_equivalence(f, 3));
  CHECK(!is_cn_injection(f, 2));
  CHECK(is_cn_injection(f, 3));
}

TEST_CASE("the inclusion A3 -> S3 at n = 3") {
  Homomorphism f = inclusion_a3_s3();
  CHECK(is_cn_equivalence(f, 3));
  CHECK(!is_cn_equivalence(f, 2)); // S3 has involutions, A3 does not
}

TEST_CASE("triviality on torsion") {
  PermGroup c3 = cyclic_group(3);
  PermGroup c2 = cyclic_group(2);
  Homomorphism any_from_c3 =
      Homomorphism::checked_by_table(c3, c3, {c3.generators()[0]});
  CHECK(is_cn_trivial(any_from_c3, 2)); // X_2 is trivial

  PermGroup s3 = symmetric_group(3);
  Homomorphism sign = Homomorphism::checked_by_table(
      s3, c2, {Perm::from_cycles("(0 1)", 2), Perm(2)});
  CHECK(!is_cn_trivial(sign, 2));

  Homomorphism trivial = Homomorphism::checked_by_table(s3, c2, {Perm(2), Perm(2)});
  CHECK(is_cn_trivial(trivial, 2));
  CHECK(is_cn_trivial(trivial, 6));
}

TEST_CASE("torsion generation") {
  CHECK(is_cn_generated(symmetric_group(3), 2));
  CHECK(!is_cn_generated(symmetric_group(3), 3)); // <G_3> = A3
  CHECK(!is_cn_generated(cyclic_group(3), 2));
  CHECK(is_cn_generated(alternating_group(4), 3));
  CHECK(is_cn_generated(quaternion_group(), 4));
  CHECK(!is_cn_generated(quaternion_group(), 2)); // G_2 = center
}

TEST_CASE("divisor enumeration") {
  CHECK(divisors_of(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors_of(1) == std::vector<std::uint64_t>{1});
}

TEST_CASE("torsion bijection reports") {
  auto id6 = torsion_bijection_check(identity_on(cyclic_group(6)), 6);
  CHECK(id6.applicable);
  REQUIRE(id6.divisors.size() == 4); // 1, 2, 3, 6
  CHECK(id6.all_pass());

  auto incl = torsion_bijection_check(inclusion_a3_s3(), 3);
  CHECK(incl.applicable);
  REQUIRE(incl.divisors.size() == 2);
  CHECK(incl.all_pass());

  auto not_applicable = torsion_bijection_check(projection_c6_c3(), 2);
  CHECK(!not_applicable.applicable);
  CHECK(not_applicable.divisors.empty());
}

TEST_CASE("level implication reports") {
  auto ok = level_implication_check(identity_on(cyclic_group(6)), 6, 2);
  CHECK(ok.hypothesis);
  CHECK(ok.conclusion);
  CHECK(ok.implication_holds);

  // X_6 has six elements, Y_6 has three: not an equivalence, vacuous.
  auto vacuous = level_implication_check(projection_c6_c3(), 6, 2);
  CHECK(!vacuous.hypothesis);
  CHECK(vacuous.implication_holds);

  auto c1 = level_implication_check(inclusion_a3_s3(), 3, 1);
  CHECK(c1.implication_holds);

  CHECK_THROWS_AS(level_implication_check(identity_on(cyclic_group(6)), 6, 4),
                  DivisibilityError);
}

TEST_CASE("torsion route matches the explicit Hom-set route") {
  auto catalog = sweep_catalog(8);
  for (const auto &[sname, source] : catalog) {
    for (const auto &[tname, target] : catalog) {
      auto homs = enumerate_homs(source, target);
      for (const Homomorphism &f : homs)
        for (std::uint64_t n : {2, 3, 4, 6})
          CHECK(is_cn_equivalence(f, n) == equivalence_by_hom_sets(f, n));
    }
  }
}
