#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidgc/word.hpp"
#include "support.hpp"

using namespace braidgc;

TEST_CASE("free reduction") {
  std::vector<Letter> raw{{xgen(1), 1}, {xgen(1), -1}};
  CHECK(reduce(raw).empty());
  CHECK(reduce({}).empty());

  std::vector<Letter> merge{{sigma(1), 2}, {sigma(1), -1}};
  CHECK(reduce(merge) == Word::single(sigma(1)));

  std::vector<Letter> nested{{xgen(1), 1}, {xgen(2), 1}, {xgen(2), -1}, {xgen(1), 2}};
  CHECK(reduce(nested) == Word::single(xgen(1), 3));
}

TEST_CASE("reduce is idempotent and splits across concatenation") {
  std::mt19937 rng(7);
  for (int t = 0; t < 500; ++t) {
    auto raw = testsupport::random_raw(rng, 4, 2, 16);
    Word whole = reduce(raw);
    CHECK(reduce(whole.letters()) == whole);
    std::uniform_int_distribution<std::size_t> cut(0, raw.size());
    std::size_t c = cut(rng);
    Word left = reduce(std::span<const Letter>(raw.data(), c));
    Word right = reduce(std::span<const Letter>(raw.data() + c, raw.size() - c));
    CHECK(left * right == whole);
  }
}

TEST_CASE("group laws at the word level") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    Word u = testsupport::random_word(rng, 4, 2, 12);
    Word v = testsupport::random_word(rng, 4, 2, 12);
    CHECK((u * u.inverse()).empty());
    CHECK((u * v).inverse() == v.inverse() * u.inverse());
    CHECK((u * v).length() <= u.length() + v.length());
  }
}

TEST_CASE("conjugation") {
  Word x1 = Word::single(xgen(1));
  Word s1 = Word::single(sigma(1));
  CHECK(conjugate(x1, s1) == Word::parse("s1^-1 x1 s1"));
  Word g = Word::parse("s1 x2^-1");
  CHECK(conjugate(g, Word{}) == g);
  CHECK(conjugate(Word::single(sigma(1), 2), s1) == Word::single(sigma(1), 2));

  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    Word a = testsupport::random_word(rng, 3, 2, 10);
    Word h = testsupport::random_word(rng, 3, 2, 10);
    CHECK(conjugate(conjugate(a, h), h.inverse()) == a);
  }
}

TEST_CASE("commutator") {
  Word r12 = Word::single(named("r12"));
  Word r11 = Word::single(named("r11"));
  CHECK(commutator(r12, r11) == Word::parse("r12^-1 r11^-1 r12 r11"));
  Word a = Word::parse("s1 x1");
  CHECK(commutator(a, a).empty());
  CHECK(commutator(Word::single(xgen(1)), Word::single(xgen(2))).length() == 4);
}

TEST_CASE("cyclic reduction") {
  Word w = Word::parse("x1 x2 x1^-1");
  auto [core, conj] = cyclic_reduce(w);
  CHECK(core == Word::single(xgen(2)));
  CHECK(conjugate(core, conj) == w);

  Word flat = Word::parse("x1 x2");
  auto [core2, conj2] = cyclic_reduce(flat);
  CHECK(core2 == flat);
  CHECK(conj2.empty());

  auto [core3, conj3] = cyclic_reduce(Word{});
  CHECK(core3.empty());
  CHECK(conj3.empty());

  std::mt19937 rng(17);
  for (int t = 0; t < 300; ++t) {
    Word u = testsupport::random_word(rng, 4, 2, 14);
    auto [c, q] = cyclic_reduce(u);
    CHECK(conjugate(c, q) == u);
    if (c.size() >= 2)
      CHECK(!(c.front().symbol == c.back().symbol &&
              (c.front().exponent > 0) != (c.back().exponent > 0)));
  }
}

TEST_CASE("grammar round trip") {
  Word w = Word::parse("s1 s2^-1 x[2,1] a[1,3]^-1");
  CHECK(w.size() == 4);
  CHECK(w.str() == "s1 s2^-1 x[2,1] a[1,3]^-1");
  CHECK(Word::parse(w.str()) == w);

  CHECK(Word::parse("1").empty());
  CHECK(Word{}.str() == "1");
  CHECK(Word::parse("x[1,3]") == Word::single(xgen(3)));
  CHECK(Word::parse("x3").str() == "x3");
  CHECK(Word::parse("r12^2") == Word::single(named("r12"), 2));
  CHECK(Word::parse("s1^0").empty());

  std::mt19937 rng(19);
  for (int t = 0; t < 200; ++t) {
    Word u = testsupport::random_word(rng, 5, 3, 20);
    CHECK(Word::parse(u.str()) == u);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Word::parse("q1"), parse_error);
  CHECK_THROWS_AS(Word::parse("s"), parse_error);
  CHECK_THROWS_AS(Word::parse("a[2,1]"), parse_error);
  CHECK_THROWS_AS(Word::parse("x[0,1]"), parse_error);
  CHECK_THROWS_AS(Word::parse("s1^"), parse_error);
  CHECK_THROWS_AS(Word::parse("s1 s2 q3"), parse_error);
  try {
    Word::parse("s1 q3");
  } catch (const parse_error& e) {
    CHECK(e.offset() == 3);
  }
}
