#include <algorithm>

#include <doctest.h>

#include "activesum/active_sum.hpp"
#include "activesum/catalog.hpp"
#include "activesum/errors.hpp"
#include "activesum/sl.hpp"
#include "word_oracle.hpp"

using namespace activesum;

TEST_CASE("single normal abelian member collapses to itself") {
  PermGroup s3 = symmetric_group(3);
  SubgroupFamily fam(s3, {Subgroup(s3, {Perm::from_cycles("(0 1 2)", 3)})});

  Presentation p = active_sum_presentation(fam, Encoding::Cyclic);
  CHECK(p.rank() == 1);
  REQUIRE(p.relators().size() == 1); // the self-conjugation relator reduces away
  CHECK(p.relators()[0] == Word{1, 1, 1});

  ActiveSumResult r = realize_active_sum(s3, fam, Encoding::Cyclic);
  CHECK(r.order_S == 3);
  CHECK(r.image_order == 3);
  CHECK(!r.generating);
  CHECK(!r.iso);
  CHECK(r.kernel_order == 1);
}

TEST_CASE("transposition family of S3 recovers S3") {
  PermGroup s3 = symmetric_group(3);
  SubgroupFamily fam = cyclic_family(s3, 2);

  Presentation p = active_sum_presentation(fam, Encoding::Cyclic);
  CHECK(p.rank() == 3);
  // Three squares plus six cross-conjugation relators.
  CHECK(p.relators().size() == 9);
  // Each cross relator has the shape x' y x z' with three distinct letters:
  // conjugating one transposition by another gives the third.
  std::size_t crosses = 0;
  for (const Word &r : p.relators()) {
    if (r.size() != 4)
      continue;
    ++crosses;
    CHECK(r[0] == -r[2]);
    CHECK(r[0] < 0);
    CHECK(r[1] > 0);
    CHECK(r[3] < 0);
    CHECK(r[1] != -r[0]);
    CHECK(r[3] != r[0]);
    CHECK(-r[3] != r[1]);
  }
  CHECK(crosses == 6);

  ActiveSumResult r = realize_active_sum(s3, fam, Encoding::Cyclic);
  CHECK(r.order_S == 6);
  CHECK(r.generating);
  CHECK(r.iso);
  CHECK(r.kernel_order == 1);

  // phi sends the regular-representation generators to the family labels.
  for (std::size_t i = 0; i < r.tau_labels.size(); ++i)
    CHECK(r.phi.evaluate(r.tau_labels[i]) == r.presentation.labels()[i].element);
}

TEST_CASE("whole-group family is the identity of the construction") {
  for (const auto &[name, G] : sweep_catalog(12)) {
    SubgroupFamily fam = whole_group_family(G);
    ActiveSumResult r = realize_active_sum(G, fam, Encoding::Regular);
    CHECK(r.order_S == G.order());
    CHECK(r.iso);
  }
}

TEST_CASE("single normal cyclic subgroup gives that subgroup") {
  // The center of Q8.
  PermGroup q8 = quaternion_group();
  Perm center = Perm(8);
  for (const Perm &x : q8.elements(10))
    if (x.order() == 2)
      center = x;
  SubgroupFamily fam(q8, {Subgroup(q8, {center})});
  ActiveSumResult r = realize_active_sum(q8, fam, Encoding::Cyclic);
  CHECK(r.order_S == 2);
  CHECK(!r.generating);

  // C3 inside C6.
  PermGroup c6 = cyclic_group(6);
  Perm sq = c6.generators()[0].power(2);
  SubgroupFamily c3fam(c6, {Subgroup(c6, {sq})});
  CHECK(realize_active_sum(c6, c3fam, Encoding::Cyclic).order_S == 3);
}

TEST_CASE("order-3 family of A4 gives a proper extension") {
  PermGroup a4 = alternating_group(4);
  SubgroupFamily fam = cyclic_family(a4, 3);
  ActiveSumResult r = realize_active_sum(a4, fam, Encoding::Cyclic);

  CHECK(r.generating);
  CHECK(r.order_S != 12);
  CHECK(r.order_S % 12 == 0);

  auto oracle = testing::presented_order_by_words(r.presentation, 6);
  REQUIRE(oracle.has_value());
  CHECK(r.order_S == *oracle);
}

TEST_CASE("regular and cyclic encodings agree") {
  PermGroup s3 = symmetric_group(3);
  PermGroup a4 = alternating_group(4);
  std::vector<std::pair<PermGroup, SubgroupFamily>> cases = {
      {s3, cyclic_family(s3, 2)},
      {a4, cyclic_family(a4, 3)},
      {s3, SubgroupFamily(s3, {Subgroup(s3, {Perm::from_cycles("(0 1 2)", 3)})})},
  };
  for (const auto &[G, fam] : cases) {
    CHECK(realize_active_sum(G, fam, Encoding::Regular).order_S ==
          realize_active_sum(G, fam, Encoding::Cyclic).order_S);
  }
}

TEST_CASE("member order does not change the result") {
  PermGroup s4 = symmetric_group(4);
  SubgroupFamily fam = cyclic_family(s4, 2);
  ActiveSumResult forward = realize_active_sum(s4, fam, Encoding::Cyclic);

  std::vector<std::size_t> reversed(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i)
    reversed[i] = fam.size() - 1 - i;
  ActiveSumResult backward =
      realize_active_sum(s4, fam.reordered(reversed), Encoding::Cyclic);
  CHECK(forward.order_S == backward.order_S);
  CHECK(forward.image_order == backward.image_order);
}

TEST_CASE("image order divides the active-sum order") {
  PermGroup s4 = symmetric_group(4);
  for (std::uint64_t m : {2, 3, 4}) {
    SubgroupFamily fam = cyclic_family(s4, m);
    if (fam.size() == 0)
      continue;
    ActiveSumResult r = realize_active_sum(s4, fam, Encoding::Cyclic);
    CHECK(r.order_S % r.image_order == 0);
    CHECK(r.kernel_order == r.order_S / r.image_order);
  }
}

TEST_CASE("cyclic encoding rejects non-cyclic members") {
  PermGroup s4 = symmetric_group(4);
  SubgroupFamily fam = whole_group_family(s4);
  CHECK_THROWS_AS(active_sum_presentation(fam, Encoding::Cyclic), EncodingError);
  CHECK(auto_encoding(fam) == Encoding::Regular);
  CHECK(auto_encoding(cyclic_family(s4, 2)) == Encoding::Cyclic);
}

TEST_CASE("strategies agree on the order-3 family of SL(3,2)") {
  PermGroup sl32 = sl_to_perm(3, 2).group;
  SubgroupFamily fam = cyclic_family(sl32, 3);
  TcOptions felsch;
  felsch.strategy = TcStrategy::Felsch;
  ActiveSumResult hlt = realize_active_sum(sl32, fam, Encoding::Cyclic);
  ActiveSumResult fel = realize_active_sum(sl32, fam, Encoding::Cyclic, felsch);
  CHECK(hlt.order_S == fel.order_S);
  CHECK(hlt.order_S % 168 == 0);
  CHECK(realize_active_sum(sl32, fam, Encoding::Regular).order_S == hlt.order_S);
}

TEST_CASE("budget exhaustion carries statistics") {
  PermGroup s3 = symmetric_group(3);
  TcOptions tiny;
  tiny.max_cosets = 2;
  CHECK_THROWS_AS(realize_active_sum(s3, cyclic_family(s3, 2), Encoding::Cyclic, tiny),
                  BudgetExceeded);
}

TEST_CASE("regular encoding spells out multiplication tables") {
  PermGroup s3 = symmetric_group(3);
  SubgroupFamily fam(s3, {Subgroup(s3, {Perm::from_cycles("(0 1 2)", 3)})});
  Presentation p = active_sum_presentation(fam, Encoding::Regular);
  CHECK(p.rank() == 2); // two nontrivial elements of A3
  ActiveSumResult r = realize_active_sum(s3, fam, Encoding::Regular);
  CHECK(r.order_S == 3);
}
