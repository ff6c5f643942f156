#ifndef GDC_INTMAT_HPP
#define GDC_INTMAT_HPP

#include <vector>

#include "gdc/basics.hpp"

namespace gdc {

// Dense exact integer matrix, column-vector convention (A*x).
struct IMat {
  int rows = 0, cols = 0;
  std::vector<i64> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}
  i64& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
  i64 at(int i, int j) const { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
  static IMat identity(int n);
  friend IMat operator*(const IMat& x, const IMat& y);
  friend bool operator==(const IMat&, const IMat&) = default;
};

// U*A*V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithResult {
  IMat d, u, v;
  std::vector<i64> invariant_factors() const;  // nonzero diagonal entries
  int rank() const;
};

SmithResult smith_normal_form(IMat A);

// Basis for {x : A*x = 0} over Z, as columns of the returned matrix.
IMat kernel_basis(const IMat& A);

// Solve A*x = b over Z; returns false if no integral solution.
bool solve_integer(const IMat& A, const std::vector<i64>& b, std::vector<i64>& x);

// Invariant factors of coker(A) = Z^rows / col-span(A): returns (free_rank,
// torsion list with entries >= 2 in a divisibility chain).
std::pair<int, std::vector<i64>> cokernel_invariants(const IMat& A);

}  // namespace gdc

#endif
