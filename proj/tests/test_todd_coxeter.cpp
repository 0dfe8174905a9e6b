#include <doctest.h>

#include "activesum/active_sum.hpp"
#include "activesum/catalog.hpp"
#include "activesum/coxeter.hpp"
#include "activesum/errors.hpp"
#include "activesum/family.hpp"
#include "activesum/todd_coxeter.hpp"
#include "word_oracle.hpp"

using namespace activesum;

TEST_CASE("cyclic group of order 3") {
  Presentation p({"a"}, {{1, 1, 1}});
  CosetTable t = todd_coxeter(p, {});
  CHECK(t.coset_count() == 3);
  CHECK(t.validate(p));
  CHECK(t.generator_action(0).order() == 3);
}

TEST_CASE("dihedral presentation of the symmetric group") {
  Presentation p({"x", "y"}, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});

  // Independent oracle: word enumeration to length 8 finds 6 classes.
  auto oracle = testing::presented_order_by_words(p, 8);
  REQUIRE(oracle.has_value());
  CHECK(*oracle == 6);

  CosetTable t = todd_coxeter(p, {});
  CHECK(t.coset_count() == *oracle);
  CHECK(t.validate(p));
}

TEST_CASE("active sum of the transposition family of S3") {
  PermGroup s3 = symmetric_group(3);
  Presentation p = active_sum_presentation(cyclic_family(s3, 2), Encoding::Cyclic);
  CosetTable t = todd_coxeter(p, {});
  CHECK(t.coset_count() == 6);
  CHECK(t.validate(p));
}

TEST_CASE("enumeration over a nontrivial subgroup counts cosets") {
  Presentation p({"x", "y"}, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
  CosetTable t = todd_coxeter(p, {Word{1}});
  CHECK(t.coset_count() == 3); // index of <x> in the order-6 group
  CosetTable whole = todd_coxeter(p, {Word{1}, Word{2}});
  CHECK(whole.coset_count() == 1);
}

TEST_CASE("budget exhaustion reports statistics and discards state") {
  Presentation free2({"a", "b"}, {});
  TcOptions tiny;
  tiny.max_cosets = 100;
  try {
    todd_coxeter(free2, {}, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded &e) {
    CHECK(e.stats().cosets_final == 100);
    CHECK(e.stats().definitions >= 100);
  }
}

TEST_CASE("felsch and hlt agree on coset counts") {
  std::vector<Presentation> cases;
  cases.push_back(Presentation({"a"}, {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}));
  cases.push_back(CoxeterMatrix::type_a(3).presentation());
  cases.push_back(CoxeterMatrix::type_b(3).presentation());
  cases.push_back(CoxeterMatrix::type_h3().presentation());
  // Quaternion group: x^4, x^2 = y^2, y^-1 x y = x^-1.
  cases.push_back(
      Presentation({"x", "y"}, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}));

  for (const Presentation &p : cases) {
    TcOptions hlt;
    TcOptions felsch;
    felsch.strategy = TcStrategy::Felsch;
    CosetTable a = todd_coxeter(p, {}, hlt);
    CosetTable b = todd_coxeter(p, {}, felsch);
    CHECK(a.coset_count() == b.coset_count());
    CHECK(a.validate(p));
    CHECK(b.validate(p));
  }
}

TEST_CASE("quaternion presentation has 8 cosets") {
  Presentation q8({"x", "y"}, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}});
  CHECK(todd_coxeter(q8, {}).coset_count() == 8);
}

TEST_CASE("determinism") {
  Presentation p = CoxeterMatrix::type_b(3).presentation();
  CosetTable a = todd_coxeter(p, {});
  CosetTable b = todd_coxeter(p, {});
  REQUIRE(a.coset_count() == b.coset_count());
  for (std::size_t g = 0; g < p.rank(); ++g)
    CHECK(a.generator_action(g) == b.generator_action(g));
}

TEST_CASE("coxeter fixtures enumerate to their orders") {
  CHECK(todd_coxeter(CoxeterMatrix::type_a(3).presentation(), {}).coset_count() ==
        24);
  CHECK(todd_coxeter(CoxeterMatrix::type_h3().presentation(), {}).coset_count() ==
        120);
}

TEST_CASE("empty presentation gives the trivial group") {
  Presentation p({}, {});
  CHECK(todd_coxeter(p, {}).coset_count() == 1);
}

TEST_CASE("direct products of cyclic groups enumerate to p*q") {
  for (int p = 2; p <= 6; ++p) {
    for (int q = 2; q <= 6; ++q) {
      Word ap(p, 1), bq(q, 2);
      Presentation pres({"a", "b"}, {ap, bq, {-1, -2, 1, 2}});
      CHECK(todd_coxeter(pres, {}).coset_count() ==
            static_cast<std::size_t>(p * q));
    }
  }
}

TEST_CASE("dihedral presentations enumerate to 2p") {
  for (int p = 2; p <= 9; ++p) {
    Word ap(p, 1);
    Presentation pres({"a", "b"}, {ap, {2, 2}, {1, 2, 1, 2}});
    CHECK(todd_coxeter(pres, {}).coset_count() == static_cast<std::size_t>(2 * p));
    // Index of the rotation subgroup.
    CHECK(todd_coxeter(pres, {Word{1}}).coset_count() == 2);
  }
}

TEST_CASE("relators acting trivially and transitivity hold on completion") {
  Presentation p = CoxeterMatrix::type_i2(6).presentation();
  CosetTable t = todd_coxeter(p, {});
  CHECK(t.coset_count() == 12);
  CHECK(t.validate(p));
  for (std::size_t g = 0; g < p.rank(); ++g)
    CHECK(t.generator_action(g).order() == 2);
}
