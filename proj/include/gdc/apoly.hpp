#ifndef GDC_APOLY_HPP
#define GDC_APOLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gdc/abelian.hpp"

namespace gdc {

using AbelianGroupPtr = std::shared_ptr<const AbelianGroup>;

// Element of the integral group ring Z[G] for an abelian G: a finite map
// from exponent-vector normal forms to nonzero integer coefficients.  For
// free G this is a Laurent polynomial ring.
class APoly {
 public:
  APoly() = default;
  explicit APoly(AbelianGroupPtr g) : grp_(std::move(g)) {}

  static APoly zero(AbelianGroupPtr g) { return APoly(std::move(g)); }
  static APoly constant(AbelianGroupPtr g, i64 c);
  static APoly monomial(AbelianGroupPtr g, const AbelianElem& e, i64 c = 1);
  // Generator t_i as a ring element.
  static APoly gen(AbelianGroupPtr g, int i, i64 exp = 1);

  const AbelianGroupPtr& group() const { return grp_; }
  const std::map<AbelianElem, i64>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }

  i64 coeff(const AbelianElem& e) const;
  void add_term(const AbelianElem& e, i64 c);  // accumulates, drops zeros

  APoly operator-() const;
  friend APoly operator+(const APoly& a, const APoly& b);
  friend APoly operator-(const APoly& a, const APoly& b);
  friend APoly operator*(const APoly& a, const APoly& b);
  APoly& operator+=(const APoly& b) { return *this = *this + b; }
  APoly& operator-=(const APoly& b) { return *this = *this - b; }
  APoly& operator*=(const APoly& b) { return *this = *this * b; }
  friend APoly operator*(i64 c, const APoly& a);

  bool operator==(const APoly& b) const { return terms_ == b.terms_; }
  // Total order usable as a map key (compares term maps lexicographically).
  std::strong_ordering operator<=>(const APoly& b) const;

  i64 augmentation() const;

  // True iff the element is +/- a single group element (a unit of Z[G] when
  // G is free abelian and, by Bass-Heller-Swan, the only units there).
  bool is_monomial_unit() const { return terms_.size() == 1 && unit_coeff() != 0; }
  // +1/-1 when a single term has coefficient +/-1, else 0.
  i64 unit_coeff() const;

  // gcd of all coefficients (nonnegative; 0 for the zero element).
  i64 content() const;

  // Exponent range of variable i over all terms.
  i64 min_exp(int i) const;
  i64 max_exp(int i) const;

  // Multiply by the monomial with the given exponent vector.
  APoly shifted(const std::vector<i64>& shift) const;

  // Multiply by +/- monomial so every variable's minimal exponent is 0 and
  // the coefficient of the smallest term (lexicographically first key) is
  // positive.  Unique comparable representative modulo +/- monomials.
  APoly normalized_unit_rep() const;

  std::string print() const;         // canonical: `3*t1^2 + -1*t1^1 + 2`
  std::string pretty() const;        // display: `3*t^2 - t + 2`

 private:
  void check_same(const APoly& b) const;
  AbelianGroupPtr grp_;
  std::map<AbelianElem, i64> terms_;
};

APoly parse_apoly(AbelianGroupPtr g, const std::string& text, int line_hint = 0);

}  // namespace gdc

#endif
