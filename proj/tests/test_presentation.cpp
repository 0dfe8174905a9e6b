#include <doctest.h>

#include "activesum/errors.hpp"
#include "activesum/presentation.hpp"

using namespace activesum;

TEST_CASE("free and cyclic reduction") {
  CHECK(free_reduce({1, -1}) == Word{});
  CHECK(free_reduce({1, 2, -2, -1}) == Word{});
  CHECK(free_reduce({1, 2, -2, 3}) == Word{1, 3});
  CHECK(cyclic_reduce({-2, 1, 1, 2}) == Word{1, 1});
  CHECK(cyclic_reduce({1, 2, -1}) == Word{2});
  CHECK(inverse_word({1, -2, 3}) == Word{-3, 2, -1});
}

TEST_CASE("relators are normalized at construction") {
  Presentation p({"a", "b"}, {{1, 1}, {1, -1}, {-2, 1, 1, 2}, {1, 1}, {2, 2, 2}});
  // {1,-1} is trivial, the conjugate of the square reduces cyclically to
  // the square itself, and duplicates are dropped.
  CHECK(p.relators().size() == 2);
  CHECK(p.relators()[0] == Word{1, 1});
  CHECK(p.relators()[1] == Word{2, 2, 2});
}

TEST_CASE("relators may not reference unknown generators") {
  CHECK_THROWS_AS(Presentation({"a"}, {{2}}), ParseError);
}

TEST_CASE("text format round trip") {
  Presentation p({"a", "b"}, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});
  std::string text = p.to_text();
  CHECK(text == "gens a b\na a\nb b\na b a b a b\n");
  Presentation q = Presentation::parse(text);
  CHECK(q.generator_names() == p.generator_names());
  CHECK(q.relators() == p.relators());

  Presentation inv = Presentation::parse("gens x y\nx' y x y'\n");
  CHECK(inv.relators()[0] == Word{-1, 2, 1, -2});
}

TEST_CASE("parse errors carry line numbers") {
  try {
    Presentation::parse("gens a\nb b\n");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(Presentation::parse("a a\n"), ParseError);
}

TEST_CASE("word evaluation") {
  std::vector<Perm> images = {Perm::from_cycles("(0 1)", 3),
                              Perm::from_cycles("(0 1 2)", 3)};
  CHECK(evaluate_word({1, 1}, images, 3).is_identity());
  CHECK(evaluate_word({2, 2, 2}, images, 3).is_identity());
  CHECK(evaluate_word({-2}, images, 3) == Perm::from_cycles("(0 2 1)", 3));
  CHECK(evaluate_word({1, 2}, images, 3) ==
        Perm::from_cycles("(0 1)", 3) * Perm::from_cycles("(0 1 2)", 3));
}

TEST_CASE("labels belong to generators") {
  Presentation p({"a"}, {{1, 1, 1}});
  CHECK(!p.has_labels());
  p.set_labels({{0, Perm::from_cycles("(0 1 2)", 3)}});
  CHECK(p.has_labels());
  CHECK_THROWS_AS(p.set_labels({}), ParseError);
}
