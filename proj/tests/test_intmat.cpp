#include "doctest.h"

#include <random>

#include "gdc/intmat.hpp"

using namespace gdc;

namespace {
IMat from(std::initializer_list<std::initializer_list<i64>> rows) {
  IMat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (i64 v : r) m.at(i, j++) = v;
    ++i;
  }
  return m;
}
}  // namespace

TEST_CASE("smith normal form invariants") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
    IMat a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a.at(i, j) = static_cast<i64>(rng() % 11) - 5;
    SmithResult s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    auto f = s.invariant_factors();
    for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
    for (i64 x : f) CHECK(x > 0);
    // off-diagonal zero
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
  }
}

TEST_CASE("kernel and solve") {
  IMat a = from({{2, 4}, {1, 2}});
  IMat k = kernel_basis(a);
  CHECK(k.cols == 1);
  // A * k == 0
  for (int i = 0; i < a.rows; ++i) {
    i64 acc = 0;
    for (int j = 0; j < a.cols; ++j) acc += a.at(i, j) * k.at(j, 0);
    CHECK(acc == 0);
  }
  std::vector<i64> x;
  CHECK(solve_integer(a, {2, 1}, x));
  CHECK(2 * x[0] + 4 * x[1] == 2);
  CHECK(!solve_integer(a, {1, 1}, x));
  CHECK(!solve_integer(from({{2}}), {1}, x));  // 2 does not divide 1
}

TEST_CASE("cokernel invariants") {
  auto [fr, tors] = cokernel_invariants(from({{2, 0}, {0, 3}}));
  CHECK(fr == 0);
  // Z/2 x Z/3 = Z/6
  CHECK(tors == std::vector<i64>{6});
  auto [fr2, tors2] = cokernel_invariants(from({{0, 0}, {0, 5}}));
  CHECK(fr2 == 1);
  CHECK(tors2 == std::vector<i64>{5});
}
