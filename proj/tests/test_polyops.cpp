#include "doctest.h"

#include <random>

#include "gdc/polyops.hpp"

using namespace gdc;

namespace {
AbelianGroupPtr Zt = std::make_shared<AbelianGroup>(1, std::vector<i64>{});
AbelianGroupPtr Zuv = std::make_shared<AbelianGroup>(2, std::vector<i64>{},
                                                     std::vector<std::string>{"u", "v"});
}  // namespace

TEST_CASE("upoly gcd / divide") {
  UPoly a({-1, 0, 1});       // t^2 - 1
  UPoly b({1, 1});           // t + 1
  CHECK(upoly_gcd(a, b) == b);
  CHECK(upoly_divexact(a, b) == UPoly({-1, 1}));
  CHECK(upoly_divides(b, a));
  CHECK(!upoly_divides(UPoly({1, 2}), a));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    auto rnd = [&](int deg) {
      std::vector<i64> c(static_cast<size_t>(deg + 1));
      for (auto& x : c) x = static_cast<i64>(rng() % 7) - 3;
      return UPoly(std::move(c));
    };
    UPoly p = rnd(3), q = rnd(2), g = rnd(2);
    if (g.is_zero()) continue;
    UPoly gp = g * p, gq = g * q;
    UPoly h = upoly_gcd(gp, gq);
    if (!gp.is_zero() && !gq.is_zero()) {
      CHECK(upoly_divides(g * UPoly({1}), h * UPoly({1})) ==
            upoly_divides(g, h));  // g | h
      CHECK(upoly_divides(upoly_primitive(g), h));
      CHECK(upoly_divides(h, gp));
      CHECK(upoly_divides(h, gq));
    }
  }
}

TEST_CASE("upoly resultant") {
  // res(t-a, t-b) = a-b (up to sign convention: product of (a - roots of b))
  UPoly p({-3, 1});  // t - 3
  UPoly q({-5, 1});  // t - 5
  i64 r = upoly_resultant(p, q);
  CHECK((r == 2 || r == -2));
  // res(t^2+1, t^2-2) = (i^2-2)((-i)^2-2) = 9
  CHECK(upoly_resultant(UPoly({1, 0, 1}), UPoly({-2, 0, 1})) == 9);
}

TEST_CASE("kronecker factorization") {
  // (t^2 - t + 1) irreducible
  auto f1 = upoly_factor(UPoly({1, -1, 1}));
  REQUIRE(f1.factors.size() == 1);
  CHECK(f1.factors[0].first == UPoly({1, -1, 1}));
  CHECK(f1.factors[0].second == 1);
  // 2*(t-1)^2*(t^2+t+1)
  UPoly p = UPoly({2}) * UPoly({-1, 1}) * UPoly({-1, 1}) * UPoly({1, 1, 1});
  auto f2 = upoly_factor(p);
  CHECK(f2.content == 2);
  i64 nfac = 0;
  for (auto& [f, m] : f2.factors) nfac += m;
  CHECK(nfac == 3);
  bool saw_lin = false, saw_quad = false;
  for (auto& [f, m] : f2.factors) {
    if (f == UPoly({-1, 1})) {
      CHECK(m == 2);
      saw_lin = true;
    }
    if (f == UPoly({1, 1, 1})) {
      CHECK(m == 1);
      saw_quad = true;
    }
  }
  CHECK(saw_lin);
  CHECK(saw_quad);
  // reassemble
  UPoly back({f2.sign * f2.content});
  for (auto& [f, m] : f2.factors)
    for (int i = 0; i < m; ++i) back = back * f;
  CHECK(back == p);
}

TEST_CASE("apoly gcd multivariate") {
  APoly u = APoly::gen(Zuv, 0), v = APoly::gen(Zuv, 1);
  APoly one = APoly::constant(Zuv, 1);
  APoly g = u - one;                  // u - 1
  APoly a = g * (v - one);            // (u-1)(v-1)
  APoly b = g * (u * v + one);        // (u-1)(uv+1)
  APoly got = apoly_gcd(a, b);
  CHECK(got == (u - one).normalized_unit_rep());
  // gcd with Laurent shifts
  APoly a2 = a * APoly::gen(Zuv, 0, -3);
  APoly b2 = b * APoly::gen(Zuv, 1, 2);
  CHECK(apoly_gcd(a2, b2) == (u - one).normalized_unit_rep());
}

TEST_CASE("apoly exact division with Laurent shifts") {
  APoly t = APoly::gen(Zt, 0);
  APoly one = APoly::constant(Zt, 1);
  APoly p = (t - one) * (t + one) * APoly::gen(Zt, 0, -2);
  APoly q = apoly_divexact(p, t - one);
  CHECK(q * (t - one) == p);
  CHECK(apoly_divides(t - one, p));
  CHECK(!apoly_divides(t + APoly::constant(Zt, 2), p));
}

TEST_CASE("fractions reduce and compare") {
  APoly t = APoly::gen(Zt, 0);
  APoly one = APoly::constant(Zt, 1);
  QFrac a((t - one) * (t + one), (t - one));  // reduces to t + 1
  CHECK(a == QFrac(t + one));
  QFrac b = QFrac(one) / QFrac(t);
  QFrac c = a * b;  // (t+1)/t
  CHECK(c == QFrac(t + one, t));
  CHECK((c - c).is_zero());
  QFrac s = QFrac(one) / QFrac(t - one) + QFrac(one) / QFrac(t + one);
  CHECK(s == QFrac(2 * t, (t - one) * (t + one)));
}

TEST_CASE("normalized unit representative") {
  APoly t = APoly::gen(Zt, 0);
  APoly one = APoly::constant(Zt, 1);
  APoly p = (t * t - t + one);
  APoly q = -1 * (p * APoly::gen(Zt, 0, -5));  // -t^-5 * p
  CHECK(q.normalized_unit_rep() == p);
}
