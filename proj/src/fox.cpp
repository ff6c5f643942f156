#include "gdc/fox.hpp"

#include <algorithm>
#include <stdexcept>

namespace gdc {

RElem fox_derivative(const Word& w, int gen, const GroupHom& phi) {
  if (!phi.source_is_free()) throw std::invalid_argument("fox derivative needs a free source");
  const FreeGroup& fg = phi.source_free();
  check_word_over(w, fg);
  if (gen < 0 || gen >= fg.rank()) throw std::out_of_range("fox derivative: bad generator");
  const Ring& R = phi.target();
  RElem d(R);
  GroupElem prefix = ring_identity(R);
  for (const auto& s : w.syllables()) {
    if (s.gen == gen) {
      const GroupElem& x = phi.images()[static_cast<size_t>(s.gen)];
      if (s.exp > 0) {
        GroupElem p = prefix;
        for (i64 k = 0; k < s.exp; ++k) {
          d.add_term(p, 1);
          p = elem_mul(R, p, x);
        }
      } else {
        GroupElem xi = elem_inv(R, x);
        GroupElem p = prefix;
        for (i64 k = 0; k < -s.exp; ++k) {
          p = elem_mul(R, p, xi);
          d.add_term(p, -1);
        }
      }
    }
    prefix = elem_mul(R, prefix,
                      elem_pow(R, phi.images()[static_cast<size_t>(s.gen)], s.exp));
  }
  return d;
}

std::vector<RElem> fox_vector(const Word& w, const GroupHom& phi) {
  std::vector<RElem> v;
  for (int i = 0; i < phi.source_free().rank(); ++i) v.push_back(fox_derivative(w, i, phi));
  return v;
}

bool fundamental_identity_holds(const Word& w, const GroupHom& phi) {
  const Ring& R = phi.target();
  RElem lhs = RElem::zero(R);
  for (int i = 0; i < phi.source_free().rank(); ++i) {
    RElem xi = RElem::of(R, phi.images()[static_cast<size_t>(i)]);
    lhs = lhs + fox_derivative(w, i, phi) * (xi - RElem::one(R));
  }
  RElem rhs = RElem::of(R, phi.apply(w)) - RElem::one(R);
  return lhs == rhs;
}

// --------------------------- free solvable keys ----------------------------

int SolvKey::key_level_of(const std::vector<SolvPoly>& fox) {
  for (const auto& p : fox)
    if (!p.empty()) return p.front().first.level() - 1;
  return 0;  // all-zero fox: nested level unknown, treat as shallow
}

bool SolvKey::is_identity() const {
  for (i64 e : ab)
    if (e != 0) return false;
  for (const auto& p : fox)
    if (!p.empty()) return false;
  return true;
}

bool operator==(const SolvKey& a, const SolvKey& b) {
  return a.ab == b.ab && a.fox == b.fox;
}

std::strong_ordering operator<=>(const SolvKey& a, const SolvKey& b) {
  if (auto c = a.ab <=> b.ab; c != 0) return c;
  if (auto c = a.fox.size() <=> b.fox.size(); c != 0) return c;
  for (size_t i = 0; i < a.fox.size(); ++i) {
    const SolvPoly& pa = a.fox[i];
    const SolvPoly& pb = b.fox[i];
    if (auto c = pa.size() <=> pb.size(); c != 0) return c;
    for (size_t k = 0; k < pa.size(); ++k) {
      if (auto c = pa[k].first <=> pb[k].first; c != 0) return c;
      if (auto c = pa[k].second <=> pb[k].second; c != 0) return c;
    }
  }
  return std::strong_ordering::equal;
}

namespace {

SolvPoly poly_add(const SolvPoly& a, const SolvPoly& b) {
  SolvPoly out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      i64 c = checked_add(a[i].second, b[j].second);
      if (c != 0) out.push_back({a[i].first, c});
      ++i;
      ++j;
    }
  }
  return out;
}

SolvPoly poly_translate(const SolvKey& g, const SolvPoly& p, WorkBudget& budget) {
  SolvPoly out;
  out.reserve(p.size());
  for (const auto& [k, c] : p) out.push_back({solv_mul(g, k, budget), c});
  std::sort(out.begin(), out.end(),
            [](const SolvTerm& x, const SolvTerm& y) { return x.first < y.first; });
  // identical keys cannot arise from translating distinct keys (left
  // translation by a group element is injective), so no merge pass needed
  return out;
}

}  // namespace

SolvKey solv_identity(int level, int rank) {
  SolvKey k;
  k.ab.assign(static_cast<size_t>(rank), 0);
  if (level >= 2) k.fox.assign(static_cast<size_t>(rank), SolvPoly{});
  return k;
}

SolvKey solv_project(const SolvKey& a, WorkBudget& budget) {
  budget.tick();
  if (a.fox.empty()) throw std::invalid_argument("cannot project a level-1 key");
  SolvKey out;
  out.ab = a.ab;
  // Level m-1 keys: push every fox coefficient one level down and merge.
  // A level-2 key projects to the bare exponent vector.
  bool lower_is_level1 = true;
  for (const auto& p : a.fox)
    if (!p.empty() && p.front().first.level() >= 2) lower_is_level1 = false;
  if (lower_is_level1) return out;  // level-1 key: ab only
  out.fox.assign(a.fox.size(), SolvPoly{});
  for (size_t i = 0; i < a.fox.size(); ++i) {
    SolvPoly merged;
    for (const auto& [k, c] : a.fox[i]) {
      SolvPoly one{{solv_project(k, budget), c}};
      merged = poly_add(merged, one);
    }
    out.fox[i] = std::move(merged);
  }
  return out;
}

SolvKey solv_mul(const SolvKey& a, const SolvKey& b, WorkBudget& budget) {
  budget.tick(1 + static_cast<i64>(a.fox.size() + b.fox.size()));
  if (a.fox.size() != b.fox.size() || a.ab.size() != b.ab.size())
    throw std::invalid_argument("solvable keys of different shapes");
  SolvKey out;
  out.ab.resize(a.ab.size());
  for (size_t i = 0; i < a.ab.size(); ++i) out.ab[i] = checked_add(a.ab[i], b.ab[i]);
  if (a.fox.empty()) return out;
  // fox(ab) = fox(a) + proj(a) . fox(b)
  bool a_trivial_fox = true;
  for (const auto& p : a.fox)
    if (!p.empty()) a_trivial_fox = false;
  SolvKey pa;
  bool have_pa = false;
  out.fox.resize(a.fox.size());
  for (size_t i = 0; i < a.fox.size(); ++i) {
    if (b.fox[i].empty()) {
      out.fox[i] = a.fox[i];
      continue;
    }
    // determine the translation key lazily (projection of a one level down)
    if (!have_pa) {
      int lvl = 0;
      for (const auto& p : a.fox)
        if (!p.empty()) lvl = std::max(lvl, p.front().first.level());
      for (const auto& p : b.fox)
        if (!p.empty()) lvl = std::max(lvl, p.front().first.level());
      pa = a_trivial_fox && lvl >= 1
               ? SolvKey{a.ab, lvl >= 2 ? std::vector<SolvPoly>(a.fox.size()) : std::vector<SolvPoly>{}}
               : solv_project(SolvKey{a.ab, a.fox}, budget);
      // shape fix: projection of a level-m key has level m-1 == key level of b.fox entries
      have_pa = true;
    }
    out.fox[i] = poly_add(a.fox[i], poly_translate(pa, b.fox[i], budget));
  }
  return out;
}

SolvKey solv_inv(const SolvKey& a, WorkBudget& budget) {
  SolvKey out;
  out.ab.resize(a.ab.size());
  for (size_t i = 0; i < a.ab.size(); ++i) out.ab[i] = checked_neg(a.ab[i]);
  if (a.fox.empty()) return out;
  // 0 = fox(a a^-1) = fox(a) + proj(a) fox(a^-1)  =>  fox(a^-1) = -proj(a)^-1 fox(a)
  SolvKey pa_inv = solv_inv(solv_project(a, budget), budget);
  out.fox.resize(a.fox.size());
  for (size_t i = 0; i < a.fox.size(); ++i) {
    SolvPoly neg;
    neg.reserve(a.fox[i].size());
    for (const auto& [k, c] : a.fox[i]) neg.push_back({k, checked_neg(c)});
    out.fox[i] = poly_translate(pa_inv, neg, budget);
  }
  return out;
}

SolvKey solv_gen(int level, int rank, int gen, i64 exp) {
  SolvKey k = solv_identity(level, rank);
  if (exp == 0) return k;
  k.ab[static_cast<size_t>(gen)] = exp;
  if (level < 2) return k;
  // fox_gen(x^e) = 1 + x + ... + x^{e-1}  (resp. -(x^-1 + ... + x^e)),
  // with keys at level-1 lower.
  WorkBudget throwaway;
  SolvKey step = solv_identity(level - 1, rank);
  SolvPoly acc;
  if (exp > 0) {
    for (i64 j = 0; j < exp; ++j) {
      acc = poly_add(acc, SolvPoly{{step, 1}});
      step = solv_mul(step, solv_gen(level - 1, rank, gen, 1), throwaway);
    }
  } else {
    SolvKey ginv = solv_gen(level - 1, rank, gen, -1);
    for (i64 j = 0; j < -exp; ++j) {
      step = solv_mul(step, ginv, throwaway);
      acc = poly_add(acc, SolvPoly{{step, -1}});
    }
  }
  k.fox[static_cast<size_t>(gen)] = std::move(acc);
  return k;
}

SolvKey solv_of_word(const Word& w, int level, int rank, WorkBudget& budget) {
  SolvKey acc = solv_identity(level, rank);
  for (const auto& s : w.syllables())
    acc = solv_mul(acc, solv_gen(level, rank, s.gen, s.exp), budget);
  return acc;
}

Decision derived_membership(const Word& w, int n, const FreeGroup& fg,
                            const DerivedOptions& opts) {
  check_word_over(w, fg);
  if (n < 0) throw std::invalid_argument("derived series level must be >= 0");
  if (n == 0) return Decision::yes;
  if (n > opts.level_cap) return Decision::undecided;
  if (n == 1) {
    std::vector<i64> sums(static_cast<size_t>(fg.rank()), 0);
    for (const auto& s : w.syllables())
      sums[static_cast<size_t>(s.gen)] = checked_add(sums[static_cast<size_t>(s.gen)], s.exp);
    for (i64 e : sums)
      if (e != 0) return Decision::no;
    return Decision::yes;
  }
  try {
    WorkBudget budget;
    budget.remaining = opts.work;
    SolvKey k = solv_of_word(w, n, fg.rank(), budget);
    return k.is_identity() ? Decision::yes : Decision::no;
  } catch (const cap_error&) {
    return Decision::undecided;
  } catch (const overflow_error&) {
    return Decision::undecided;
  }
}

// ------------------------------- gropes ------------------------------------

int GropeShape::height() const {
  if (children.empty()) return 1;
  int h = 0;
  for (const auto& c : children) h = std::max(h, c.height());
  return 1 + h;
}

i64 GropeShape::leaf_count() const {
  if (children.empty()) return 2 * genus;
  i64 n = 0;
  for (const auto& c : children) n = checked_add(n, c.leaf_count());
  return n;
}

GropeShape GropeShape::simplest(int height) {
  GropeShape s;
  s.genus = 1;
  if (height > 1) {
    s.children.push_back(simplest(height - 1));
    s.children.push_back(simplest(height - 1));
  }
  return s;
}

namespace {

Word boundary_rec(const GropeShape& shape, const std::vector<Word>& leaves, size_t& next) {
  if (shape.genus < 1) throw std::invalid_argument("grope stage needs genus >= 1");
  Word out;
  if (shape.children.empty()) {
    for (int i = 0; i < shape.genus; ++i) {
      const Word& a = leaves.at(next++);
      const Word& b = leaves.at(next++);
      out = out * commutator(a, b);
    }
    return out;
  }
  if (static_cast<int>(shape.children.size()) != 2 * shape.genus)
    throw std::invalid_argument("grope stage must have 2*genus children");
  for (int i = 0; i < shape.genus; ++i) {
    Word a = boundary_rec(shape.children[static_cast<size_t>(2 * i)], leaves, next);
    Word b = boundary_rec(shape.children[static_cast<size_t>(2 * i + 1)], leaves, next);
    out = out * commutator(a, b);
  }
  return out;
}

void collect_at_depth(const GropeShape& shape, const std::vector<Word>& leaves, size_t& next,
                      int depth, std::vector<Word>& out) {
  if (depth == 0) {
    size_t tmp = next;
    out.push_back(boundary_rec(shape, leaves, tmp));
    // still consume this subtree's leaves from the shared cursor
    next += static_cast<size_t>(shape.leaf_count());
    return;
  }
  if (shape.children.empty()) {
    // depth reaches past the surface stage: the remaining boundaries are the
    // cap words themselves
    for (int i = 0; i < 2 * shape.genus; ++i) out.push_back(leaves.at(next++));
    return;
  }
  for (const auto& c : shape.children) collect_at_depth(c, leaves, next, depth - 1, out);
}

}  // namespace

Word grope_boundary_word(const GropeShape& shape, const std::vector<Word>& leaves) {
  if (static_cast<i64>(leaves.size()) != shape.leaf_count())
    throw std::invalid_argument("grope shape/leaf count mismatch");
  size_t next = 0;
  return boundary_rec(shape, leaves, next);
}

std::vector<Word> grope_boundaries_at_depth(const GropeShape& shape,
                                            const std::vector<Word>& leaves, int depth) {
  if (static_cast<i64>(leaves.size()) != shape.leaf_count())
    throw std::invalid_argument("grope shape/leaf count mismatch");
  if (depth < 0 || depth > shape.height())
    throw std::invalid_argument("grope depth out of range");
  std::vector<Word> out;
  size_t next = 0;
  collect_at_depth(shape, leaves, next, depth, out);
  return out;
}

}  // namespace gdc
