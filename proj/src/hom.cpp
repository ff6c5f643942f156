#include "gdc/hom.hpp"

#include <stdexcept>

namespace gdc {

GroupHom::GroupHom(std::variant<FreeGroup, AbelianGroup> source, Ring target,
                   std::vector<GroupElem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  size_t n = source_is_free() ? static_cast<size_t>(source_free().rank())
                              : static_cast<size_t>(source_abelian().num_gens());
  if (images_.size() != n)
    throw std::invalid_argument("hom: image count does not match source rank");
  if (!source_is_free()) {
    const auto& g = source_abelian();
    for (size_t i = 0; i < g.torsion.size(); ++i) {
      const GroupElem& im = images_[static_cast<size_t>(g.free_rank) + i];
      if (!elem_is_identity(elem_pow(target_, im, g.torsion[i])))
        throw std::invalid_argument("hom: image violates source torsion order");
    }
  }
}

GroupHom GroupHom::identity_on_free(const FreeGroup& fg) {
  std::vector<GroupElem> images;
  for (int i = 0; i < fg.rank(); ++i) images.emplace_back(Word::gen(i));
  return GroupHom(fg, make_free_ring(fg), std::move(images));
}

GroupHom GroupHom::identity_on_abelian(const AbelianGroup& g) {
  std::vector<GroupElem> images;
  for (int i = 0; i < g.num_gens(); ++i) {
    AbelianElem e = ab_identity(g);
    e.exps[static_cast<size_t>(i)] = 1;
    images.emplace_back(ab_normalize(g, e.exps));
  }
  return GroupHom(g, make_abelian_ring(g), std::move(images));
}

Ring GroupHom::source_ring() const {
  if (source_is_free()) return make_free_ring(source_free());
  return make_abelian_ring(source_abelian());
}

GroupElem GroupHom::apply(const Word& w) const {
  if (!source_is_free()) throw std::invalid_argument("hom source is not free");
  check_word_over(w, source_free());
  GroupElem acc = ring_identity(target_);
  for (const auto& s : w.syllables())
    acc = elem_mul(target_, acc,
                   elem_pow(target_, images_[static_cast<size_t>(s.gen)], s.exp));
  return acc;
}

GroupElem GroupHom::apply_ab(const AbelianElem& a) const {
  if (source_is_free()) throw std::invalid_argument("hom source is not abelian");
  GroupElem acc = ring_identity(target_);
  for (size_t i = 0; i < a.exps.size(); ++i)
    acc = elem_mul(target_, acc, elem_pow(target_, images_[i], a.exps[i]));
  return acc;
}

GroupElem GroupHom::apply_elem(const GroupElem& g) const {
  if (std::holds_alternative<Word>(g)) return apply(std::get<Word>(g));
  if (std::holds_alternative<AbelianElem>(g)) return apply_ab(std::get<AbelianElem>(g));
  throw std::invalid_argument("hom cannot be applied to tower elements");
}

RElem GroupHom::map_ring(const RElem& a) const {
  if (!same_ring(a.ring(), source_ring())) throw ring_mismatch("coefficient change: tag mismatch");
  RElem out(target_);
  for (const auto& [g, c] : a.terms()) out.add_term(apply_elem(g), c);
  return out;
}

APoly GroupHom::map_apoly(const APoly& a) const {
  RElem in = RElem::from_apoly(make_abelian_ring(*a.group()), a);
  return map_ring(in).as_apoly();
}

GroupHom GroupHom::compose_after(const GroupHom& rhs) const {
  std::vector<GroupElem> images;
  for (const auto& im : rhs.images()) images.push_back(apply_elem(im));
  return GroupHom(rhs.source_, target_, std::move(images));
}

}  // namespace gdc
