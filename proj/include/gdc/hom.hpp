#ifndef GDC_HOM_HPP
#define GDC_HOM_HPP

#include <variant>
#include <vector>

#include "gdc/groupring.hpp"

namespace gdc {

// Group homomorphism given by generator images.  Source is free or abelian;
// the target may be free, abelian, or a tower level (via its ring tag).
class GroupHom {
 public:
  GroupHom() = default;
  // For an abelian source the images must respect the torsion orders.
  GroupHom(std::variant<FreeGroup, AbelianGroup> source, Ring target,
           std::vector<GroupElem> images);

  static GroupHom identity_on_free(const FreeGroup& fg);
  static GroupHom identity_on_abelian(const AbelianGroup& g);

  bool source_is_free() const { return source_.index() == 0; }
  const FreeGroup& source_free() const { return std::get<FreeGroup>(source_); }
  const AbelianGroup& source_abelian() const { return std::get<AbelianGroup>(source_); }
  Ring source_ring() const;
  const Ring& target() const { return target_; }
  const std::vector<GroupElem>& images() const { return images_; }

  GroupElem apply(const Word& w) const;
  GroupElem apply_ab(const AbelianElem& a) const;
  GroupElem apply_elem(const GroupElem& g) const;
  bool kills(const Word& w) const { return elem_is_identity(apply(w)); }

  // Linear extension to group rings: the change-of-coefficient map.
  RElem map_ring(const RElem& a) const;
  APoly map_apoly(const APoly& a) const;  // abelian source and target

  // Composition target-after-source where rhs lands in this->source.
  GroupHom compose_after(const GroupHom& rhs) const;

 private:
  std::variant<FreeGroup, AbelianGroup> source_;
  Ring target_;
  std::vector<GroupElem> images_;
};

// coefficient_change(a, lambda): a over Z[source(lambda)] mapped into the
// target ring by the linear extension of lambda.
inline RElem coefficient_change(const RElem& a, const GroupHom& lambda) {
  return lambda.map_ring(a);
}

}  // namespace gdc

#endif
