#include "doctest.h"

#include <random>

#include "gdc/groupring.hpp"
#include "gdc/hom.hpp"

using namespace gdc;

namespace {

Ring z_ring() { return make_abelian_ring(AbelianGroup(1, {})); }
Ring z2_ring() { return make_abelian_ring(AbelianGroup(2, {}, {"u", "v"})); }

RElem tpow(const Ring& r, i64 e, i64 c = 1) {
  AbelianElem a = ab_identity(r->abelian());
  a.exps[0] = e;
  return RElem::of(r, a, c);
}

}  // namespace

TEST_CASE("unit inverse, expansion, additive inverse") {
  Ring R = z_ring();
  CHECK(tpow(R, 1) * tpow(R, -1) == RElem::one(R));
  RElem one = RElem::one(R), t = tpow(R, 1);
  CHECK((one - t) * (one + t) == one - tpow(R, 2));
  Ring R2 = z2_ring();
  RElem v = RElem::of(R2, ab_normalize(R2->abelian(), {0, 1}));
  CHECK(((RElem::one(R2) - v) + (v - RElem::one(R2))).is_zero());
}

TEST_CASE("ring tag mismatch is an error") {
  CHECK_THROWS_AS(ring_add(RElem::one(z_ring()), RElem::one(z2_ring())), ring_mismatch);
}

TEST_CASE("augmentation is a ring hom to Z") {
  Ring R = z_ring();
  RElem a = tpow(R, 2, 3) - tpow(R, 1);  // 3t^2 - t
  CHECK(augmentation(a) == 2);
  CHECK(augmentation(RElem::zero(R)) == 0);
  Ring R2 = z2_ring();
  RElem u = RElem::of(R2, ab_normalize(R2->abelian(), {1, 0}));
  RElem v = RElem::of(R2, ab_normalize(R2->abelian(), {0, 1}));
  CHECK(augmentation(u - v) == 0);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    RElem p = RElem::zero(R), q = RElem::zero(R);
    for (int k = 0; k < 4; ++k) {
      p = p + tpow(R, static_cast<i64>(rng() % 7) - 3, static_cast<i64>(rng() % 9) - 4);
      q = q + tpow(R, static_cast<i64>(rng() % 7) - 3, static_cast<i64>(rng() % 9) - 4);
    }
    CHECK(augmentation(p * q) == augmentation(p) * augmentation(q));
    CHECK(augmentation(p + q) == augmentation(p) + augmentation(q));
  }
}

TEST_CASE("ring axioms on random triples") {
  Ring R2 = z2_ring();
  std::mt19937_64 rng(23);
  auto rand_elem = [&] {
    RElem e = RElem::zero(R2);
    int terms = static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
      AbelianElem a = ab_normalize(
          R2->abelian(), {static_cast<i64>(rng() % 5) - 2, static_cast<i64>(rng() % 5) - 2});
      e.add_term(a, static_cast<i64>(rng() % 7) - 3);
    }
    return e;
  };
  for (int i = 0; i < 100; ++i) {
    RElem a = rand_elem(), b = rand_elem(), c = rand_elem();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("torsion exponents reduce into canonical range") {
  AbelianGroup g(1, {3});  // Z x Z/3
  Ring R = make_abelian_ring(g);
  RElem s = RElem::of(R, ab_normalize(g, {0, 1}));
  RElem s3 = s * s * s;
  CHECK(s3 == RElem::one(R));
  CHECK(RElem::of(R, ab_normalize(g, {0, -1})) == s * s);
}

TEST_CASE("coefficient change along a hom") {
  // lambda: u, v -> t
  Ring Zt = z_ring();
  AbelianGroup uv(2, {}, {"u", "v"});
  AbelianElem t1 = ab_identity(Zt->abelian());
  t1.exps[0] = 1;
  GroupHom lambda(uv, Zt, {GroupElem(t1), GroupElem(t1)});
  Ring R2 = make_abelian_ring(uv);
  RElem v = RElem::of(R2, ab_normalize(uv, {0, 1}));
  RElem u = RElem::of(R2, ab_normalize(uv, {1, 0}));
  CHECK(coefficient_change(RElem::one(R2) - v, lambda) == RElem::one(Zt) - tpow(Zt, 1));
  // linearity: (u-1)+(v-1) -> 2(t-1)
  RElem lhs = coefficient_change((u - RElem::one(R2)) + (v - RElem::one(R2)), lambda);
  CHECK(lhs == 2 * (tpow(Zt, 1) - RElem::one(Zt)));
  // to the trivial group: augmentation
  Ring triv = make_abelian_ring(AbelianGroup(0, {}));
  GroupHom eps(uv, triv, {ring_identity(triv), ring_identity(triv)});
  RElem p = tpow(R2, 0);  // placeholder to silence unused warnings
  (void)p;
  RElem q = coefficient_change(u * u - u + RElem::one(R2), eps);
  CHECK(q == RElem::one(triv));
  // commutes with augmentation
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    RElem e = RElem::zero(R2);
    for (int k = 0; k < 3; ++k)
      e.add_term(ab_normalize(uv, {static_cast<i64>(rng() % 5) - 2,
                                   static_cast<i64>(rng() % 5) - 2}),
                 static_cast<i64>(rng() % 9) - 4);
    CHECK(augmentation(coefficient_change(e, lambda)) == augmentation(e));
  }
}

TEST_CASE("hom application on words") {
  FreeGroup F{{"x", "y"}};
  Ring Zt = z_ring();
  AbelianElem t1 = ab_identity(Zt->abelian());
  t1.exps[0] = 1;
  GroupHom phi(F, Zt, {GroupElem(t1), GroupElem(t1)});
  Word trefoil = parse_word("x*y*x*y^-1*x^-1*y^-1", F);
  CHECK(elem_is_identity(phi.apply(trefoil)));

  // phi(x)=t, phi(y)=1: x y x^-1 -> t * 1 * t^-1 = identity
  GroupHom phi2(F, Zt, {GroupElem(t1), GroupElem(ab_identity(Zt->abelian()))});
  Word w = parse_word("x*y*x^-1", F);
  CHECK(elem_is_identity(phi2.apply(w)));
}

TEST_CASE("hom application exponent-vector sum") {
  FreeGroup F{{"x", "y"}};
  AbelianGroup uv(2, {}, {"u", "v"});
  Ring R2 = make_abelian_ring(uv);
  GroupHom phi(F, R2,
               {GroupElem(ab_normalize(uv, {1, 0})), GroupElem(ab_normalize(uv, {0, 1}))});
  Word w = parse_word("x^2*y^-1", F);
  CHECK(phi.apply(w) == GroupElem(ab_normalize(uv, {2, -1})));
  CHECK(elem_is_identity(phi.apply(Word())));
}
