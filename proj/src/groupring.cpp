#include "gdc/groupring.hpp"

#include <stdexcept>

namespace gdc {

std::string RingDesc::describe() const {
  if (is_free_group()) {
    std::string s = "free<";
    for (size_t i = 0; i < free_group().names.size(); ++i)
      s += (i ? "," : "") + free_group().names[i];
    return s + ">";
  }
  if (is_abelian()) {
    const auto& g = abelian();
    std::string s = "abelian r=" + std::to_string(g.free_rank) + " torsion=";
    for (size_t i = 0; i < g.torsion.size(); ++i)
      s += (i ? "," : "") + std::to_string(g.torsion[i]);
    return s;
  }
  return tower()->describe();
}

Ring make_free_ring(FreeGroup fg) {
  auto d = std::make_shared<RingDesc>();
  d->kind = std::move(fg);
  return d;
}

Ring make_abelian_ring(AbelianGroup g) {
  auto d = std::make_shared<RingDesc>();
  d->kind = std::move(g);
  return d;
}

Ring make_tower_ring(TowerArithPtr t) {
  auto d = std::make_shared<RingDesc>();
  d->kind = std::move(t);
  return d;
}

AbelianGroupPtr abelian_ptr(const Ring& r) {
  if (!r->is_abelian()) throw ring_mismatch("abelian ring tag required");
  return std::make_shared<AbelianGroup>(r->abelian());
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind.index() != b->kind.index()) return false;
  if (a->is_free_group()) return a->free_group() == b->free_group();
  if (a->is_abelian()) return a->abelian() == b->abelian();
  return a->tower()->same_level(*b->tower());
}

GroupElem ring_identity(const Ring& r) {
  if (r->is_free_group()) return Word();
  if (r->is_abelian()) return ab_identity(r->abelian());
  return r->tower()->identity();
}

GroupElem elem_mul(const Ring& r, const GroupElem& a, const GroupElem& b) {
  if (r->is_free_group()) return std::get<Word>(a) * std::get<Word>(b);
  if (r->is_abelian()) return ab_mul(r->abelian(), std::get<AbelianElem>(a), std::get<AbelianElem>(b));
  return r->tower()->mul(std::get<TowerElem>(a), std::get<TowerElem>(b));
}

GroupElem elem_inv(const Ring& r, const GroupElem& a) {
  if (r->is_free_group()) return std::get<Word>(a).inverse();
  if (r->is_abelian()) return ab_inv(r->abelian(), std::get<AbelianElem>(a));
  return r->tower()->inv(std::get<TowerElem>(a));
}

GroupElem elem_pow(const Ring& r, const GroupElem& a, i64 n) {
  if (n == 0) return ring_identity(r);
  GroupElem base = n > 0 ? a : elem_inv(r, a);
  i64 k = n > 0 ? n : checked_neg(n);
  GroupElem acc = ring_identity(r);
  for (i64 i = 0; i < k; ++i) acc = elem_mul(r, acc, base);
  return acc;
}

bool elem_is_identity(const GroupElem& a) {
  if (std::holds_alternative<Word>(a)) return std::get<Word>(a).is_identity();
  if (std::holds_alternative<AbelianElem>(a)) return ab_is_identity(std::get<AbelianElem>(a));
  const auto& t = std::get<TowerElem>(a);
  if (!ab_is_identity(t.gamma)) return false;
  for (const auto& k : t.kappa)
    if (!k.is_zero()) return false;
  return true;
}

RElem RElem::one(Ring r) { return constant(std::move(r), 1); }

RElem RElem::constant(Ring r, i64 c) {
  RElem e(std::move(r));
  if (c != 0) e.terms_[ring_identity(e.ring_)] = c;
  return e;
}

RElem RElem::of(Ring r, const GroupElem& g, i64 c) {
  RElem e(std::move(r));
  if (c != 0) e.terms_[g] = c;
  return e;
}

void RElem::add_term(const GroupElem& g, i64 c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void RElem::check_same(const RElem& b) const {
  if (!same_ring(ring_, b.ring_)) throw ring_mismatch("group ring tag mismatch");
}

RElem RElem::operator-() const {
  RElem r(ring_);
  for (const auto& [g, c] : terms_) r.terms_[g] = checked_neg(c);
  return r;
}

RElem ring_add(const RElem& a, const RElem& b) {
  a.check_same(b);
  RElem r = a;
  for (const auto& [g, c] : b.terms_) r.add_term(g, c);
  return r;
}

RElem ring_sub(const RElem& a, const RElem& b) {
  a.check_same(b);
  RElem r = a;
  for (const auto& [g, c] : b.terms_) r.add_term(g, checked_neg(c));
  return r;
}

RElem ring_mul(const RElem& a, const RElem& b) {
  a.check_same(b);
  RElem r(a.ring_);
  for (const auto& [ga, ca] : a.terms_)
    for (const auto& [gb, cb] : b.terms_)
      r.add_term(elem_mul(a.ring_, ga, gb), checked_mul(ca, cb));
  return r;
}

RElem operator*(i64 c, const RElem& a) {
  RElem r(a.ring());
  for (const auto& [g, k] : a.terms()) r.add_term(g, checked_mul(c, k));
  return r;
}

std::strong_ordering RElem::operator<=>(const RElem& b) const {
  auto ia = terms_.begin(), ib = b.terms_.begin();
  for (; ia != terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  if (ia != terms_.end()) return std::strong_ordering::greater;
  if (ib != b.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

i64 RElem::augmentation() const {
  i64 s = 0;
  for (const auto& [g, c] : terms_) s = checked_add(s, c);
  return s;
}

i64 augmentation(const RElem& a) { return a.augmentation(); }

bool RElem::is_monomial_unit() const {
  if (terms_.size() != 1) return false;
  i64 c = terms_.begin()->second;
  return c == 1 || c == -1;
}

APoly RElem::as_apoly() const {
  if (!ring_->is_abelian()) throw ring_mismatch("as_apoly: abelian ring tag required");
  APoly p(abelian_ptr(ring_));
  for (const auto& [g, c] : terms_) p.add_term(std::get<AbelianElem>(g), c);
  return p;
}

RElem RElem::from_apoly(const Ring& r, const APoly& p) {
  if (!r->is_abelian()) throw ring_mismatch("from_apoly: abelian ring tag required");
  RElem e(r);
  for (const auto& [g, c] : p.terms()) e.terms_[GroupElem(g)] = c;
  return e;
}

std::string RElem::print() const {
  if (terms_.empty()) return "0";
  if (ring_->is_abelian()) return as_apoly().print();
  std::string out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += std::to_string(c) + "*";
    if (std::holds_alternative<Word>(g)) {
      FreeGroup fg = ring_->free_group();
      out += "(" + print_word(std::get<Word>(g), fg) + ")";
    } else if (std::holds_alternative<AbelianElem>(g)) {
      out += "(" + print_ab_elem(ring_->abelian(), std::get<AbelianElem>(g)) + ")";
    } else {
      const auto& t = std::get<TowerElem>(g);
      out += "{g=" + print_ab_elem(ring_->tower()->base(), t.gamma) + "; k=(";
      for (size_t i = 0; i < t.kappa.size(); ++i) out += (i ? "; " : "") + t.kappa[i].print();
      out += ")}";
    }
  }
  return out;
}

}  // namespace gdc
