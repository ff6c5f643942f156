#include "doctest.h"

#include <random>

#include "gdc/word.hpp"

using namespace gdc;

namespace {
const FreeGroup F2{{"x", "y"}};
const Word X = Word::gen(0), Y = Word::gen(1);
}  // namespace

TEST_CASE("free reduction basics") {
  // x x^-1 -> 1
  CHECK(free_reduce({{0, 1}, {0, -1}}).is_identity());
  // x y y^-1 x -> x^2
  Word w = free_reduce({{0, 1}, {1, 1}, {1, -1}, {0, 1}});
  CHECK(w == Word::gen(0, 2));
  // x y x^-1 already reduced
  Word u = free_reduce({{0, 1}, {1, 1}, {0, -1}});
  CHECK(u.syllables().size() == 3);
  CHECK(u == X * Y * X.inverse());
}

TEST_CASE("free reduction is idempotent and confluent under noise") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Syllable> raw;
    int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i)
      raw.push_back({static_cast<int>(rng() % 3), static_cast<i64>(rng() % 5) - 2});
    Word w = free_reduce(raw);
    CHECK(free_reduce(w.syllables()) == w);
    // Insert cancelling pairs at random spots; the reduction must not change.
    std::vector<Syllable> noisy;
    for (const auto& s : raw) {
      if (rng() % 3 == 0) {
        int g = static_cast<int>(rng() % 3);
        i64 e = static_cast<i64>(rng() % 3) + 1;
        noisy.push_back({g, e});
        noisy.push_back({g, -e});
      }
      noisy.push_back(s);
    }
    CHECK(free_reduce(noisy) == w);
  }
}

TEST_CASE("inverse and commutator") {
  Word w = X * Y * X.inverse();
  CHECK((w * w.inverse()).is_identity());
  CHECK(commutator(X, Y) == X * Y * X.inverse() * Y.inverse());
  CHECK(commutator(X, X).is_identity());
}

TEST_CASE("word parse / print round trip") {
  auto check_round = [&](const std::string& s) {
    Word w = parse_word(s, F2);
    CHECK(parse_word(print_word(w, F2), F2) == w);
  };
  check_round("x*y*x*y^-1*x^-1*y^-1");
  check_round("1");
  check_round("[x,y]");
  check_round("x^3*[x,y^2]*y^-4");
  CHECK(parse_word("[x,y]", F2) == commutator(X, Y));
  CHECK(parse_word("[x,y]*[y,x]", F2).is_identity());
  CHECK(parse_word("(x*y)^2", F2) == X * Y * X * Y);
}

TEST_CASE("word parse failures carry position") {
  CHECK_THROWS_AS(parse_word("x*z", F2), parse_error);
  CHECK_THROWS_AS(parse_word("x*", F2), parse_error);
  CHECK_THROWS_AS(parse_word("[x y]", F2), parse_error);
  CHECK_THROWS_AS(parse_word("", F2), parse_error);
}

TEST_CASE("words over wrong group are rejected") {
  Word bad = Word::gen(5);
  CHECK_THROWS_AS(check_word_over(bad, F2), std::out_of_range);
}
