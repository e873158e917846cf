#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "braidgc/perm.hpp"
#include "braidgc/schreier.hpp"
#include "support.hpp"

using namespace braidgc;

TEST_CASE("generator images") {
  CHECK(project(Word::parse("s1"), 2).cycle_notation() == "(1 2)");
  CHECK(project(Word::parse("x1"), 2).is_identity());
  CHECK(project(Word::parse("s1 s2 s1"), 3) == project(Word::parse("s2 s1 s2"), 3));
  CHECK(project(Word::parse("s1 s2 s1"), 3).cycle_notation() == "(1 3)");
  CHECK(project(Word{}, 4).cycle_notation() == "id");
}

TEST_CASE("projection is a homomorphism") {
  std::mt19937 rng(23);
  for (int t = 0; t < 1000; ++t) {
    Word u = testsupport::random_word(rng, 4, 2, 12);
    Word v = testsupport::random_word(rng, 4, 2, 12);
    CHECK(project(u * v, 4) == project(u, 4) * project(v, 4));
  }
}

TEST_CASE("composition applies the right factor first") {
  // m_j = s_j ... s_1 must send strand 1 to j+1
  for (int n = 2; n <= 8; ++n) {
    auto reps = schreier_transversal(n);
    for (int j = 0; j < n; ++j) CHECK(project(reps[static_cast<std::size_t>(j)], n).apply(1) == j + 1);
  }
}

TEST_CASE("purity") {
  CHECK(is_pure(Word::parse("a[1,3]"), 3));
  CHECK(!is_pure(Word::parse("s1"), 3));
  // the 3-cycle image of s1 s2 has order 3
  Word w = Word::parse("s1 s2").pow(3);
  CHECK(is_pure(w, 3));
  CHECK(!is_pure(Word::parse("s1 s2"), 3));
}

TEST_CASE("inverse and errors") {
  Word w = Word::parse("s1 s3 s2");
  Permutation p = project(w, 4);
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(project(Word::parse("s4"), 4), std::invalid_argument);
  CHECK_THROWS_AS(project(Word::parse("r12"), 4), std::invalid_argument);
}

TEST_CASE("coset representative products hit every permutation once") {
  // products M_2 M_3 ... M_n over the level transversals, in original
  // coordinates, give n! distinct images
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::vector<Word>> levels;  // level size k uses strands n-k+1..n
    for (int k = 2; k <= n; ++k) {
      std::vector<Word> reps;
      int off = n - k;  // sigma indices shift by off
      for (int j = 0; j < k; ++j) {
        Word m;
        for (int i = j; i >= 1; --i) m.append(sigma(off + i), 1);
        reps.push_back(m);
      }
      levels.push_back(reps);
    }
    std::vector<Word> products{Word{}};
    for (const auto& reps : levels) {
      std::vector<Word> next;
      for (const Word& p : products)
        for (const Word& m : reps) next.push_back(p * m);
      products = std::move(next);
    }
    std::set<std::vector<int>> images;
    for (const Word& p : products) images.insert(project(p, n).images());
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(static_cast<long long>(images.size()) == fact);
  }
}
