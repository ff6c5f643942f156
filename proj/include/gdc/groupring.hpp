#ifndef GDC_GROUPRING_HPP
#define GDC_GROUPRING_HPP

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gdc/apoly.hpp"
#include "gdc/word.hpp"

namespace gdc {

// Element of a solvable tower level over an abelian base: the pair of its
// image in the base group and the kernel-class normal form (a vector over
// the base group ring, reduced modulo the cached relator-Jacobian image).
// Two words represent the same tower element exactly when the pairs agree,
// so the pair is the canonical key for tower-ring terms.
struct TowerElem {
  AbelianElem gamma;
  std::vector<APoly> kappa;

  friend bool operator==(const TowerElem& a, const TowerElem& b) {
    return a.gamma == b.gamma && a.kappa == b.kappa;
  }
  friend std::strong_ordering operator<=>(const TowerElem& a, const TowerElem& b) {
    if (auto c = a.gamma <=> b.gamma; c != 0) return c;
    if (auto c = a.kappa.size() <=> b.kappa.size(); c != 0) return c;
    for (size_t i = 0; i < a.kappa.size(); ++i)
      if (auto c = a.kappa[i] <=> b.kappa[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
};

// Group arithmetic for tower elements; implemented by tower::TowerLevel,
// which owns the normal-form data.
struct TowerArith {
  virtual ~TowerArith() = default;
  virtual const AbelianGroup& base() const = 0;
  virtual int kappa_size() const = 0;
  virtual TowerElem identity() const = 0;
  virtual TowerElem mul(const TowerElem& a, const TowerElem& b) const = 0;
  virtual TowerElem inv(const TowerElem& a) const = 0;
  virtual bool same_level(const TowerArith& other) const = 0;
  virtual std::string describe() const = 0;
};

using TowerArithPtr = std::shared_ptr<const TowerArith>;

using GroupElem = std::variant<Word, AbelianElem, TowerElem>;

// Coefficient-group descriptor shared by ring elements.
struct RingDesc {
  std::variant<FreeGroup, AbelianGroup, TowerArithPtr> kind;

  bool is_free_group() const { return kind.index() == 0; }
  bool is_abelian() const { return kind.index() == 1; }
  bool is_tower() const { return kind.index() == 2; }
  const FreeGroup& free_group() const { return std::get<FreeGroup>(kind); }
  const AbelianGroup& abelian() const { return std::get<AbelianGroup>(kind); }
  const TowerArithPtr& tower() const { return std::get<TowerArithPtr>(kind); }
  std::string describe() const;
};

using Ring = std::shared_ptr<const RingDesc>;

Ring make_free_ring(FreeGroup fg);
Ring make_abelian_ring(AbelianGroup g);
Ring make_tower_ring(TowerArithPtr t);
// Shared abelian descriptor for a ring tag (for APoly interop).
AbelianGroupPtr abelian_ptr(const Ring& r);

bool same_ring(const Ring& a, const Ring& b);
GroupElem ring_identity(const Ring& r);
GroupElem elem_mul(const Ring& r, const GroupElem& a, const GroupElem& b);
GroupElem elem_inv(const Ring& r, const GroupElem& a);
GroupElem elem_pow(const Ring& r, const GroupElem& a, i64 n);
bool elem_is_identity(const GroupElem& a);

// Exact integral group ring element: finite map from group-element normal
// forms to nonzero integer coefficients, canonically ordered.
class RElem {
 public:
  RElem() = default;
  explicit RElem(Ring r) : ring_(std::move(r)) {}

  static RElem zero(Ring r) { return RElem(std::move(r)); }
  static RElem one(Ring r);
  static RElem constant(Ring r, i64 c);
  static RElem of(Ring r, const GroupElem& g, i64 c = 1);

  const Ring& ring() const { return ring_; }
  const std::map<GroupElem, i64>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  void add_term(const GroupElem& g, i64 c);

  RElem operator-() const;
  friend RElem ring_add(const RElem& a, const RElem& b);
  friend RElem ring_sub(const RElem& a, const RElem& b);
  friend RElem ring_mul(const RElem& a, const RElem& b);
  friend RElem operator+(const RElem& a, const RElem& b) { return ring_add(a, b); }
  friend RElem operator-(const RElem& a, const RElem& b) { return ring_sub(a, b); }
  friend RElem operator*(const RElem& a, const RElem& b) { return ring_mul(a, b); }
  friend RElem operator*(i64 c, const RElem& a);

  bool operator==(const RElem& b) const { return terms_ == b.terms_; }
  std::strong_ordering operator<=>(const RElem& b) const;

  i64 augmentation() const;
  // +/- single group element?
  bool is_monomial_unit() const;

  // Conversions for abelian tags.
  APoly as_apoly() const;
  static RElem from_apoly(const Ring& r, const APoly& p);

  std::string print() const;

 private:
  void check_same(const RElem& b) const;
  Ring ring_;
  std::map<GroupElem, i64> terms_;
};

i64 augmentation(const RElem& a);

}  // namespace gdc

#endif
