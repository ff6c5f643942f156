#include "gdc/intmat.hpp"

#include <cstdlib>

namespace gdc {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat operator*(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("IMat dimension mismatch");
  IMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      i64 xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(xik, y.at(k, j)));
    }
  return r;
}

std::vector<i64> SmithResult::invariant_factors() const {
  std::vector<i64> f;
  int n = std::min(d.rows, d.cols);
  for (int i = 0; i < n; ++i)
    if (d.at(i, i) != 0) f.push_back(d.at(i, i));
  return f;
}

int SmithResult::rank() const { return static_cast<int>(invariant_factors().size()); }

namespace {

void row_op(IMat& m, int dst, int src, i64 q) {  // row dst -= q * row src
  for (int j = 0; j < m.cols; ++j)
    m.at(dst, j) = checked_sub(m.at(dst, j), checked_mul(q, m.at(src, j)));
}
void col_op(IMat& m, int dst, int src, i64 q) {  // col dst -= q * col src
  for (int i = 0; i < m.rows; ++i)
    m.at(i, dst) = checked_sub(m.at(i, dst), checked_mul(q, m.at(i, src)));
}
void swap_rows(IMat& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(IMat& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

}  // namespace

SmithResult smith_normal_form(IMat A) {
  SmithResult res;
  res.u = IMat::identity(A.rows);
  res.v = IMat::identity(A.cols);
  IMat& m = A;
  int n = std::min(m.rows, m.cols);
  for (int s = 0; s < n; ++s) {
    // Find the smallest nonzero entry in the lower-right block.
    int pi = -1, pj = -1;
    for (int i = s; i < m.rows; ++i)
      for (int j = s; j < m.cols; ++j) {
        i64 v = m.at(i, j);
        if (v != 0 && (pi < 0 || std::llabs(v) < std::llabs(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(m, s, pi);
    swap_rows(res.u, s, pi);
    swap_cols(m, s, pj);
    swap_cols(res.v, s, pj);
    // Clear row and column s; restart if a remainder shrinks the pivot.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = s + 1; i < m.rows; ++i) {
        if (m.at(i, s) == 0) continue;
        i64 q = m.at(i, s) / m.at(s, s);
        row_op(m, i, s, q);
        row_op(res.u, i, s, q);
        if (m.at(i, s) != 0) {  // nonzero remainder becomes the new pivot
          swap_rows(m, s, i);
          swap_rows(res.u, s, i);
          dirty = true;
        }
      }
      for (int j = s + 1; j < m.cols; ++j) {
        if (m.at(s, j) == 0) continue;
        i64 q = m.at(s, j) / m.at(s, s);
        col_op(m, j, s, q);
        col_op(res.v, j, s, q);
        if (m.at(s, j) != 0) {
          swap_cols(m, s, j);
          swap_cols(res.v, s, j);
          dirty = true;
        }
      }
    }
    // Divisibility: fold any non-multiple into the pivot.
    for (int i = s + 1; i < m.rows; ++i)
      for (int j = s + 1; j < m.cols; ++j) {
        if (m.at(i, j) % m.at(s, s) != 0) {
          // add row i to row s, then redo this stage
          row_op(m, s, i, -1);
          row_op(res.u, s, i, -1);
          --s;
          goto next_stage;
        }
      }
    if (m.at(s, s) < 0) {
      for (int j = 0; j < m.cols; ++j) m.at(s, j) = checked_neg(m.at(s, j));
      for (int j = 0; j < res.u.cols; ++j) res.u.at(s, j) = checked_neg(res.u.at(s, j));
    }
  next_stage:;
  }
  res.d = m;
  return res;
}

IMat kernel_basis(const IMat& A) {
  SmithResult s = smith_normal_form(A);
  int r = s.rank();
  IMat k(A.cols, A.cols - r);
  // A = U^-1 D V^-1, so A*x = 0 iff D*(V^-1 x) = 0 iff V^-1 x has support in
  // the zero part of D; kernel basis = last (cols - r) columns of V.
  for (int i = 0; i < A.cols; ++i)
    for (int j = 0; j < A.cols - r; ++j) k.at(i, j) = s.v.at(i, r + j);
  return k;
}

bool solve_integer(const IMat& A, const std::vector<i64>& b, std::vector<i64>& x) {
  if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve: bad rhs size");
  SmithResult s = smith_normal_form(A);
  std::vector<i64> ub(static_cast<size_t>(A.rows), 0);
  for (int i = 0; i < A.rows; ++i) {
    i64 acc = 0;
    for (int j = 0; j < A.rows; ++j)
      acc = checked_add(acc, checked_mul(s.u.at(i, j), b[static_cast<size_t>(j)]));
    ub[static_cast<size_t>(i)] = acc;
  }
  std::vector<i64> y(static_cast<size_t>(A.cols), 0);
  int n = std::min(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i) {
    i64 d = i < n ? s.d.at(i, i) : 0;
    if (d == 0) {
      if (ub[static_cast<size_t>(i)] != 0) return false;
    } else {
      if (ub[static_cast<size_t>(i)] % d != 0) return false;
      y[static_cast<size_t>(i)] = ub[static_cast<size_t>(i)] / d;
    }
  }
  x.assign(static_cast<size_t>(A.cols), 0);
  for (int i = 0; i < A.cols; ++i) {
    i64 acc = 0;
    for (int j = 0; j < A.cols; ++j)
      acc = checked_add(acc, checked_mul(s.v.at(i, j), y[static_cast<size_t>(j)]));
    x[static_cast<size_t>(i)] = acc;
  }
  return true;
}

std::pair<int, std::vector<i64>> cokernel_invariants(const IMat& A) {
  SmithResult s = smith_normal_form(A);
  std::vector<i64> tors;
  for (i64 f : s.invariant_factors())
    if (f > 1) tors.push_back(f);
  int free_rank = A.rows - s.rank();
  return {free_rank, tors};
}

}  // namespace gdc
