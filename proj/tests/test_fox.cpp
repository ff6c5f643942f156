#include "doctest.h"

#include <random>

#include "gdc/fox.hpp"

using namespace gdc;

namespace {

const FreeGroup F2{{"x", "y"}};

GroupHom phi_t() {
  Ring Zt = make_abelian_ring(AbelianGroup(1, {}));
  AbelianElem t = ab_identity(Zt->abelian());
  t.exps[0] = 1;
  return GroupHom(F2, Zt, {GroupElem(t), GroupElem(t)});
}

GroupHom phi_t_1() {  // x -> t, y -> 1
  Ring Zt = make_abelian_ring(AbelianGroup(1, {}));
  AbelianElem t = ab_identity(Zt->abelian());
  t.exps[0] = 1;
  return GroupHom(F2, Zt, {GroupElem(t), GroupElem(ab_identity(Zt->abelian()))});
}

Word rand_word(std::mt19937_64& rng, int rank, int len) {
  std::vector<Syllable> raw;
  for (int i = 0; i < len; ++i)
    raw.push_back({static_cast<int>(rng() % static_cast<unsigned>(rank)),
                   (rng() % 2 ? 1 : -1) * (1 + static_cast<i64>(rng() % 2))});
  return free_reduce(raw);
}

}  // namespace

TEST_CASE("fox axioms") {
  GroupHom id = GroupHom::identity_on_free(F2);
  Ring RF = id.target();
  CHECK(fox_derivative(Word::gen(0), 0, id) == RElem::one(RF));
  CHECK(fox_derivative(Word::gen(1), 0, id).is_zero());
  // d(x^-1)/dx = -x^-1
  CHECK(fox_derivative(Word::gen(0, -1), 0, id) ==
        RElem::of(RF, GroupElem(Word::gen(0, -1)), -1));
  // d(xyx^-1y^-1)/dx = 1 - xyx^-1
  Word c = commutator(Word::gen(0), Word::gen(1));
  RElem expected = RElem::one(RF) -
                   RElem::of(RF, GroupElem(Word::gen(0) * Word::gen(1) * Word::gen(0, -1)));
  CHECK(fox_derivative(c, 0, id) == expected);
}

TEST_CASE("product rule") {
  GroupHom phi = phi_t();
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    Word u = rand_word(rng, 2, 4), v = rand_word(rng, 2, 4);
    for (int g = 0; g < 2; ++g) {
      RElem lhs = fox_derivative(u * v, g, phi);
      RElem rhs = fox_derivative(u, g, phi) +
                  RElem::of(phi.target(), phi.apply(u)) * fox_derivative(v, g, phi);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("fundamental identity on 1000 random words") {
  std::mt19937_64 rng(29);
  GroupHom phi = phi_t();
  GroupHom phi2 = phi_t_1();
  GroupHom id = GroupHom::identity_on_free(F2);
  for (int i = 0; i < 1000; ++i) {
    Word w = rand_word(rng, 2, 1 + static_cast<int>(rng() % 8));
    CHECK(fundamental_identity_holds(w, phi));
    if (i % 3 == 0) CHECK(fundamental_identity_holds(w, phi2));
    if (i % 5 == 0) CHECK(fundamental_identity_holds(w, id));
  }
}

TEST_CASE("derived membership small cases") {
  Word x = Word::gen(0), y = Word::gen(1);
  Word c = commutator(x, y);
  CHECK(derived_membership(c, 1, F2) == Decision::yes);
  CHECK(derived_membership(c, 2, F2) == Decision::no);
  CHECK(derived_membership(x, 1, F2) == Decision::no);
  // [[x,y],[x^2,y]] is a commutator of two level-1 members
  Word c2 = commutator(c, commutator(x * x, y));
  CHECK(derived_membership(c2, 1, F2) == Decision::yes);
  CHECK(derived_membership(c2, 2, F2) == Decision::yes);
  CHECK(derived_membership(c2, 3, F2) == Decision::no);
  CHECK(derived_membership(Word(), 4, F2) == Decision::yes);
}

TEST_CASE("derived membership level 1 iff exponent sums vanish") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    Word w = rand_word(rng, 2, 6);
    std::vector<i64> sums(2, 0);
    for (const auto& s : w.syllables()) sums[static_cast<size_t>(s.gen)] += s.exp;
    bool expect = sums[0] == 0 && sums[1] == 0;
    CHECK((derived_membership(w, 1, F2) == Decision::yes) == expect);
  }
}

TEST_CASE("grope boundary words") {
  FreeGroup F4{{"a", "b", "c", "d"}};
  Word a = Word::gen(0), b = Word::gen(1), c = Word::gen(2), d = Word::gen(3);
  // height 1, genus 1
  GropeShape s1 = GropeShape::simplest(1);
  CHECK(grope_boundary_word(s1, {a, b}) == commutator(a, b));
  // height 2, simplest
  GropeShape s2 = GropeShape::simplest(2);
  CHECK(grope_boundary_word(s2, {a, b, c, d}) ==
        commutator(commutator(a, b), commutator(c, d)));
  // height 1, genus 2
  GropeShape g2;
  g2.genus = 2;
  CHECK(grope_boundary_word(g2, {a, b, c, d}) == commutator(a, b) * commutator(c, d));
  // leaf count mismatch
  CHECK_THROWS_AS(grope_boundary_word(s2, {a, b, c}), std::invalid_argument);
}

TEST_CASE("grope boundary vs derived membership (simplest shapes)") {
  FreeGroup F4{{"a", "b", "c", "d"}};
  std::vector<Word> leaves;
  for (int i = 0; i < 4; ++i) leaves.push_back(Word::gen(i));
  for (int n = 1; n <= 2; ++n) {
    GropeShape s = GropeShape::simplest(n);
    std::vector<Word> use(leaves.begin(), leaves.begin() + (1 << n));
    FreeGroup F{{std::vector<std::string>(F4.names.begin(), F4.names.begin() + (1 << n))}};
    Word bw = grope_boundary_word(s, use);
    CHECK(derived_membership(bw, n, F) == Decision::yes);
    CHECK(derived_membership(bw, n + 1, F) == Decision::no);
  }
}

TEST_CASE("boundaries at depth") {
  FreeGroup F4{{"a", "b", "c", "d"}};
  Word a = Word::gen(0), b = Word::gen(1), c = Word::gen(2), d = Word::gen(3);
  GropeShape s2 = GropeShape::simplest(2);
  auto at1 = grope_boundaries_at_depth(s2, {a, b, c, d}, 1);
  REQUIRE(at1.size() == 2);
  CHECK(at1[0] == commutator(a, b));
  CHECK(at1[1] == commutator(c, d));
  auto at2 = grope_boundaries_at_depth(s2, {a, b, c, d}, 2);
  REQUIRE(at2.size() == 4);
  CHECK(at2[0] == a);
  auto at0 = grope_boundaries_at_depth(s2, {a, b, c, d}, 0);
  REQUIRE(at0.size() == 1);
  CHECK(at0[0] == grope_boundary_word(s2, {a, b, c, d}));
}
