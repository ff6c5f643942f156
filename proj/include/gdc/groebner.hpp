#ifndef GDC_GROEBNER_HPP
#define GDC_GROEBNER_HPP

#include <optional>
#include <vector>

#include "gdc/apoly.hpp"

namespace gdc {

struct GbOptions {
  i64 work = 50'000'000;   // completion/reduction budget
  i64 degree_cap = 400;    // total degree cap per monomial
  i64 term_cap = 100000;   // term count cap per element
  bool track_lifts = true; // keep tag components for lift()/syzygies()
};

// Submodule of Z[G]^s for an abelian G, closed under a strong (D-) Groebner
// basis over the integers.  Laurent directions are handled by an inverse
// variable per free generator with the relation t*u = 1, torsion generators
// by s^o = 1, so membership, normal forms, lifts, and syzygies are exact
// over the actual group ring.  Throws cap_error when the work budget or the
// degree cap is exceeded; callers convert that into "undecided".
class ModuleGB {
 public:
  ModuleGB(AbelianGroupPtr grp, int components, std::vector<std::vector<APoly>> generators,
           GbOptions opts = {});

  int components() const { return ncomp_; }
  const AbelianGroupPtr& group() const { return grp_; }
  int num_generators() const { return ngens_; }

  // Canonical representative of v modulo the submodule; zero iff member.
  std::vector<APoly> normal_form(const std::vector<APoly>& v) const;
  bool contains(const std::vector<APoly>& v) const;
  // Coefficients c with v = sum_j c_j * gen_j, when v is a member.
  std::optional<std::vector<APoly>> lift(const std::vector<APoly>& v) const;
  // Generating set for { c : sum_j c_j * gen_j = 0 } over the group ring.
  std::vector<std::vector<APoly>> syzygies() const;

  // Whether the submodule is all of Z[G]^s (every unit vector a member).
  bool is_full() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  AbelianGroupPtr grp_;
  int ncomp_ = 0;
  int ngens_ = 0;
};

// Convenience: ideal membership of 1 (unit ideal test).
bool ideal_contains_unit(const AbelianGroupPtr& grp, const std::vector<APoly>& gens,
                         GbOptions opts = {});

}  // namespace gdc

#endif
