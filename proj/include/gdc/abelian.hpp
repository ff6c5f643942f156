#ifndef GDC_ABELIAN_HPP
#define GDC_ABELIAN_HPP

#include <memory>
#include <string>
#include <vector>

#include "gdc/basics.hpp"

namespace gdc {

// Finitely generated abelian group Z^r x Z/o_1 x ... x Z/o_k with the
// torsion orders in a divisibility chain.  Generator display names cover
// first the free part, then the torsion part.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<i64> torsion;  // each >= 2, o_i | o_{i+1}
  std::vector<std::string> names;

  AbelianGroup() = default;
  AbelianGroup(int r, std::vector<i64> tors, std::vector<std::string> names_ = {});

  int num_gens() const { return free_rank + static_cast<int>(torsion.size()); }
  bool is_trivial() const { return num_gens() == 0; }
  bool is_free() const { return torsion.empty(); }
  const std::string& name(int i) const { return names.at(static_cast<size_t>(i)); }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

// Default display names: "t" for rank one, else t1, t2, ...; torsion
// generators continue the numbering.
std::vector<std::string> default_abelian_names(int free_rank, int torsion_count);

// Element of an AbelianGroup as an exponent vector in normal form: free
// exponents arbitrary, torsion exponents reduced into [0, o_i).
struct AbelianElem {
  std::vector<i64> exps;
  friend auto operator<=>(const AbelianElem&, const AbelianElem&) = default;
};

AbelianElem ab_identity(const AbelianGroup& g);
AbelianElem ab_normalize(const AbelianGroup& g, std::vector<i64> exps);
AbelianElem ab_mul(const AbelianGroup& g, const AbelianElem& a, const AbelianElem& b);
AbelianElem ab_inv(const AbelianGroup& g, const AbelianElem& a);
AbelianElem ab_pow(const AbelianGroup& g, const AbelianElem& a, i64 n);
inline bool ab_is_identity(const AbelianElem& a) {
  for (i64 e : a.exps)
    if (e != 0) return false;
  return true;
}

// Monomial syntax `t1^2*t2^-1`, `1` for the identity.
std::string print_ab_elem(const AbelianGroup& g, const AbelianElem& a);
AbelianElem parse_ab_elem(const AbelianGroup& g, const std::string& text, int line_hint = 0);

}  // namespace gdc

#endif
