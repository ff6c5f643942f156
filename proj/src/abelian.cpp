#include "gdc/abelian.hpp"

#include <cctype>
#include <stdexcept>

namespace gdc {

std::vector<std::string> default_abelian_names(int free_rank, int torsion_count) {
  std::vector<std::string> out;
  int n = free_rank + torsion_count;
  if (n == 1) {
    out.push_back("t");
    return out;
  }
  for (int i = 0; i < n; ++i) out.push_back("t" + std::to_string(i + 1));
  return out;
}

AbelianGroup::AbelianGroup(int r, std::vector<i64> tors, std::vector<std::string> names_)
    : free_rank(r), torsion(std::move(tors)), names(std::move(names_)) {
  if (r < 0) throw std::invalid_argument("negative free rank");
  for (size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) throw std::invalid_argument("torsion order must be >= 2");
    if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
      throw std::invalid_argument("torsion orders must form a divisibility chain");
  }
  if (names.empty()) names = default_abelian_names(free_rank, static_cast<int>(torsion.size()));
  if (static_cast<int>(names.size()) != num_gens())
    throw std::invalid_argument("abelian group: name count != generator count");
}

AbelianElem ab_identity(const AbelianGroup& g) {
  return AbelianElem{std::vector<i64>(static_cast<size_t>(g.num_gens()), 0)};
}

AbelianElem ab_normalize(const AbelianGroup& g, std::vector<i64> exps) {
  if (static_cast<int>(exps.size()) != g.num_gens())
    throw std::invalid_argument("abelian element has wrong exponent count");
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    i64 o = g.torsion[i];
    i64& e = exps[static_cast<size_t>(g.free_rank) + i];
    e %= o;
    if (e < 0) e += o;
  }
  return AbelianElem{std::move(exps)};
}

AbelianElem ab_mul(const AbelianGroup& g, const AbelianElem& a, const AbelianElem& b) {
  std::vector<i64> e(a.exps.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a.exps[i], b.exps[i]);
  return ab_normalize(g, std::move(e));
}

AbelianElem ab_inv(const AbelianGroup& g, const AbelianElem& a) {
  std::vector<i64> e(a.exps.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = checked_neg(a.exps[i]);
  return ab_normalize(g, std::move(e));
}

AbelianElem ab_pow(const AbelianGroup& g, const AbelianElem& a, i64 n) {
  std::vector<i64> e(a.exps.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = checked_mul(a.exps[i], n);
  return ab_normalize(g, std::move(e));
}

std::string print_ab_elem(const AbelianGroup& g, const AbelianElem& a) {
  std::string out;
  for (int i = 0; i < g.num_gens(); ++i) {
    i64 e = a.exps[static_cast<size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += g.name(i);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

AbelianElem parse_ab_elem(const AbelianGroup& g, const std::string& text, int line_hint) {
  std::vector<i64> exps(static_cast<size_t>(g.num_gens()), 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw parse_error(msg, line_hint, static_cast<int>(pos) + 1);
  };
  skip_ws();
  if (pos >= text.size()) fail("empty group element");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!first) {
      if (text[pos] != '*') fail("expected '*' between factors");
      ++pos;
      skip_ws();
    }
    first = false;
    if (text[pos] == '1' &&
        (pos + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      continue;
    }
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected generator name");
    std::string name = text.substr(start, pos - start);
    int idx = -1;
    for (int i = 0; i < g.num_gens(); ++i)
      if (g.name(i) == name) idx = i;
    if (idx < 0) fail("unknown abelian generator '" + name + "'");
    i64 e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      size_t istart = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits) fail("expected integer exponent");
      e = std::stoll(text.substr(istart, pos - istart));
    }
    exps[static_cast<size_t>(idx)] = checked_add(exps[static_cast<size_t>(idx)], e);
  }
  return ab_normalize(g, std::move(exps));
}

}  // namespace gdc
