#ifndef GDC_FOX_HPP
#define GDC_FOX_HPP

#include <vector>

#include "gdc/hom.hpp"

namespace gdc {

// Free differential calculus: d(uv) = du + phi(u) dv, d(x_i)/dx_i = 1,
// d(x_j)/dx_i = 0.  The result lives in the group ring of phi's target.
RElem fox_derivative(const Word& w, int gen, const GroupHom& phi);
std::vector<RElem> fox_vector(const Word& w, const GroupHom& phi);

// sum_i (dw/dx_i) (phi(x_i) - 1) == phi(w) - 1, the identity every Fox
// computation must satisfy; used by tests and validation.
bool fundamental_identity_holds(const Word& w, const GroupHom& phi);

// ---------------------------------------------------------------------------
// Canonical forms in free solvable quotients F/F^(n) (iterated Magnus pairs).
// A level-n key stores the exponent vector and, for n >= 2, the Fox vector
// over Z[F/F^(n-1)], whose term keys are level-(n-1) keys.  Equality of keys
// is equality in F/F^(n).
// ---------------------------------------------------------------------------
struct SolvKey;
using SolvTerm = std::pair<SolvKey, i64>;
using SolvPoly = std::vector<SolvTerm>;  // sorted by key, no zero coefficients

struct SolvKey {
  std::vector<i64> ab;
  std::vector<SolvPoly> fox;  // empty iff level 1

  int level() const { return fox.empty() ? 1 : 2 + key_level_of(fox); }
  bool is_identity() const;
  friend bool operator==(const SolvKey&, const SolvKey&);
  friend std::strong_ordering operator<=>(const SolvKey&, const SolvKey&);

 private:
  static int key_level_of(const std::vector<SolvPoly>& fox);
};

SolvKey solv_identity(int level, int rank);
SolvKey solv_gen(int level, int rank, int gen, i64 exp);
SolvKey solv_mul(const SolvKey& a, const SolvKey& b, WorkBudget& budget);
SolvKey solv_inv(const SolvKey& a, WorkBudget& budget);
SolvKey solv_project(const SolvKey& a, WorkBudget& budget);  // level m -> m-1
// Canonical form of w in F/F^(level).
SolvKey solv_of_word(const Word& w, int level, int rank, WorkBudget& budget);

// Membership in the derived series: w in F^(n)?  Exact at any level within
// the work cap; "undecided" when the cap is hit, never a silent false.
struct DerivedOptions {
  int level_cap = 6;
  i64 work = 20'000'000;
};
Decision derived_membership(const Word& w, int n, const FreeGroup& fg,
                            const DerivedOptions& opts = {});

// ---------------------------------------------------------------------------
// Grope shapes and boundary words.
// ---------------------------------------------------------------------------
// A stage of genus g has either no children (height 1; its 2g basis curves
// are caps) or exactly 2g children.  Leaves are consumed depth-first.
struct GropeShape {
  int genus = 1;
  std::vector<GropeShape> children;

  int height() const;
  i64 leaf_count() const;
  static GropeShape simplest(int height);  // genus one at every stage
};

// Boundary word: height 1 gives prod_i [a_i, b_i]; greater heights
// substitute the child boundary words for the basis curves.
Word grope_boundary_word(const GropeShape& shape, const std::vector<Word>& leaves);

// Boundary words of the sub-gropes rooted at the given depth (depth 0 is the
// whole grope; depth == height yields the cap words themselves).
std::vector<Word> grope_boundaries_at_depth(const GropeShape& shape,
                                            const std::vector<Word>& leaves, int depth);

}  // namespace gdc

#endif
