#ifndef GDC_POLYOPS_HPP
#define GDC_POLYOPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gdc/apoly.hpp"

namespace gdc {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z, low degree first, no trailing zeros.
// Used for the rank-one fast paths, normalization, and factoring.
// ---------------------------------------------------------------------------
struct UPoly {
  std::vector<i64> c;
  UPoly() = default;
  explicit UPoly(std::vector<i64> coeffs);
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  i64 lead() const { return c.empty() ? 0 : c.back(); }
  i64 eval(i64 x) const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;
};

i64 upoly_content(const UPoly& p);
UPoly upoly_primitive(const UPoly& p);           // content stripped, lead > 0
UPoly upoly_gcd(UPoly a, UPoly b);               // primitive PRS, lead > 0
bool upoly_divides(const UPoly& d, const UPoly& p);
UPoly upoly_divexact(const UPoly& p, const UPoly& d);
i64 upoly_resultant(const UPoly& a, const UPoly& b);

// Irreducible factorization over Z by the Kronecker interpolation method.
// Returns (unit in {+1,-1}, constant content, list of (primitive irreducible
// factor, multiplicity)).  Intended for the desk-scale degrees that arise in
// torsion normalization; throws cap_error above the degree cap.
struct UFactorization {
  int sign = 1;
  i64 content = 1;
  std::vector<std::pair<UPoly, int>> factors;
};
UFactorization upoly_factor(const UPoly& p, int degree_cap = 24);

// ---------------------------------------------------------------------------
// Laurent elements of free abelian group rings as univariate views / gcds.
// ---------------------------------------------------------------------------

// Requires a rank-one free group ring; strips the monomial shift.
UPoly to_upoly(const APoly& p);
APoly from_upoly(const AbelianGroupPtr& g, const UPoly& p);

// gcd in Z[t1^.., tr^..] for free abelian tags, well defined up to +/-
// monomial; the result is returned in normalized unit representative form.
APoly apoly_gcd(const APoly& a, const APoly& b);

// Exact division; throws if d does not divide p (free abelian tags only).
APoly apoly_divexact(const APoly& p, const APoly& d);
bool apoly_divides(const APoly& d, const APoly& p);

// ---------------------------------------------------------------------------
// Fractions p/q of free-abelian group ring elements, kept reduced.  The
// field of fractions hosting chain contractions and torsion determinants.
// ---------------------------------------------------------------------------
class QFrac {
 public:
  QFrac() = default;
  explicit QFrac(APoly num) : num_(std::move(num)), den_(APoly::constant(num_.group(), 1)) {}
  QFrac(APoly num, APoly den);
  static QFrac zero(const AbelianGroupPtr& g) { return QFrac(APoly::zero(g)); }
  static QFrac one(const AbelianGroupPtr& g) { return QFrac(APoly::constant(g, 1)); }

  const APoly& num() const { return num_; }
  const APoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend QFrac operator+(const QFrac& a, const QFrac& b);
  friend QFrac operator-(const QFrac& a, const QFrac& b);
  friend QFrac operator*(const QFrac& a, const QFrac& b);
  friend QFrac operator/(const QFrac& a, const QFrac& b);
  QFrac operator-() const;
  bool operator==(const QFrac& b) const;

 private:
  void reduce();
  APoly num_, den_;
};

}  // namespace gdc

#endif
