#include "gdc/apoly.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace gdc {

APoly APoly::constant(AbelianGroupPtr g, i64 c) {
  APoly p(std::move(g));
  if (c != 0) p.terms_[ab_identity(*p.grp_)] = c;
  return p;
}

APoly APoly::monomial(AbelianGroupPtr g, const AbelianElem& e, i64 c) {
  APoly p(std::move(g));
  if (c != 0) p.terms_[ab_normalize(*p.grp_, e.exps)] = c;
  return p;
}

APoly APoly::gen(AbelianGroupPtr g, int i, i64 exp) {
  AbelianElem e = ab_identity(*g);
  e.exps.at(static_cast<size_t>(i)) = exp;
  return monomial(std::move(g), e);
}

i64 APoly::coeff(const AbelianElem& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void APoly::add_term(const AbelianElem& e, i64 c) {
  if (c == 0) return;
  AbelianElem key = ab_normalize(*grp_, e.exps);
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void APoly::check_same(const APoly& b) const {
  if (!grp_ || !b.grp_) throw ring_mismatch("group ring element without a ring tag");
  if (!(*grp_ == *b.grp_)) throw ring_mismatch("group ring tag mismatch");
}

APoly APoly::operator-() const {
  APoly r(grp_);
  for (const auto& [e, c] : terms_) r.terms_[e] = checked_neg(c);
  return r;
}

APoly operator+(const APoly& a, const APoly& b) {
  a.check_same(b);
  APoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

APoly operator-(const APoly& a, const APoly& b) {
  a.check_same(b);
  APoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, checked_neg(c));
  return r;
}

APoly operator*(const APoly& a, const APoly& b) {
  a.check_same(b);
  APoly r(a.grp_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(ab_mul(*a.grp_, ea, eb), checked_mul(ca, cb));
  return r;
}

APoly operator*(i64 c, const APoly& a) {
  APoly r(a.group());
  for (const auto& [e, k] : a.terms()) r.add_term(e, checked_mul(c, k));
  return r;
}

std::strong_ordering APoly::operator<=>(const APoly& b) const {
  auto ia = terms_.begin(), ib = b.terms_.begin();
  for (; ia != terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  if (ia != terms_.end()) return std::strong_ordering::greater;
  if (ib != b.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

i64 APoly::augmentation() const {
  i64 s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

i64 APoly::unit_coeff() const {
  if (terms_.size() != 1) return 0;
  i64 c = terms_.begin()->second;
  return (c == 1 || c == -1) ? c : 0;
}

i64 APoly::content() const {
  i64 g = 0;
  for (const auto& [e, c] : terms_) g = std::gcd(g, c);
  return g;
}

i64 APoly::min_exp(int i) const {
  if (terms_.empty()) return 0;
  i64 m = terms_.begin()->first.exps.at(static_cast<size_t>(i));
  for (const auto& [e, c] : terms_) m = std::min(m, e.exps[static_cast<size_t>(i)]);
  return m;
}

i64 APoly::max_exp(int i) const {
  if (terms_.empty()) return 0;
  i64 m = terms_.begin()->first.exps.at(static_cast<size_t>(i));
  for (const auto& [e, c] : terms_) m = std::max(m, e.exps[static_cast<size_t>(i)]);
  return m;
}

APoly APoly::shifted(const std::vector<i64>& shift) const {
  APoly r(grp_);
  for (const auto& [e, c] : terms_) {
    std::vector<i64> ex = e.exps;
    for (size_t i = 0; i < ex.size(); ++i) ex[i] = checked_add(ex[i], shift[i]);
    r.add_term(ab_normalize(*grp_, std::move(ex)), c);
  }
  return r;
}

APoly APoly::normalized_unit_rep() const {
  if (terms_.empty()) return *this;
  std::vector<i64> shift(static_cast<size_t>(grp_->num_gens()), 0);
  for (int i = 0; i < grp_->free_rank; ++i) shift[static_cast<size_t>(i)] = -min_exp(i);
  APoly r = shifted(shift);
  if (r.terms_.begin()->second < 0) r = -r;
  return r;
}

std::string APoly::print() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += std::to_string(c);
    for (int i = 0; i < grp_->num_gens(); ++i) {
      i64 ex = e.exps[static_cast<size_t>(i)];
      if (ex == 0) continue;
      out += "*t" + std::to_string(i + 1);
      if (ex != 1) out += "^" + std::to_string(ex);
    }
  }
  return out;
}

std::string APoly::pretty() const {
  if (terms_.empty()) return "0";
  // Display order: lexicographically largest exponent vector first.
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    i64 c = it->second;
    bool neg = c < 0;
    i64 ac = neg ? -c : c;
    std::string mono;
    for (int i = 0; i < grp_->num_gens(); ++i) {
      i64 ex = it->first.exps[static_cast<size_t>(i)];
      if (ex == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += grp_->name(i);
      if (ex != 1) mono += "^" + std::to_string(ex);
    }
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += std::to_string(ac);
    else if (ac == 1)
      out += mono;
    else
      out += std::to_string(ac) + "*" + mono;
  }
  return out;
}

APoly parse_apoly(AbelianGroupPtr g, const std::string& text, int line_hint) {
  APoly out(g);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw parse_error(msg, line_hint, static_cast<int>(pos) + 1);
  };
  skip_ws();
  if (pos >= text.size()) fail("empty ring element");
  if (text[pos] == '0' && pos + 1 >= text.size()) return out;
  bool first_term = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!first_term) {
      if (text[pos] != '+') fail("expected '+' between terms");
      ++pos;
      skip_ws();
    }
    first_term = false;
    // coefficient
    size_t cstart = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer coefficient");
    i64 c = std::stoll(text.substr(cstart, pos - cstart));
    AbelianElem e = ab_identity(*g);
    skip_ws();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      size_t nstart = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      if (pos == nstart) fail("expected variable name after '*'");
      std::string name = text.substr(nstart, pos - nstart);
      int idx = -1;
      for (int i = 0; i < g->num_gens(); ++i) {
        if ("t" + std::to_string(i + 1) == name || g->name(i) == name) idx = i;
      }
      if (idx < 0) fail("unknown ring variable '" + name + "'");
      i64 ex = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        size_t istart = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t d2 = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == d2) fail("expected integer exponent");
        ex = std::stoll(text.substr(istart, pos - istart));
      }
      size_t ii = static_cast<size_t>(idx);
      e.exps[ii] = checked_add(e.exps[ii], ex);
      skip_ws();
    }
    out.add_term(e, c);
  }
  return out;
}

}  // namespace gdc
