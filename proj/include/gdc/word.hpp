#ifndef GDC_WORD_HPP
#define GDC_WORD_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "gdc/basics.hpp"

namespace gdc {

// One run of a single generator: x_gen^exp with exp != 0.
struct Syllable {
  int gen = 0;
  i64 exp = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// A freely reduced word in a free group.  Adjacent syllables always have
// distinct generators and nonzero exponents; the empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> reduced) : syl_(std::move(reduced)) {}

  static Word gen(int g, i64 e = 1) {
    Word w;
    if (e != 0) w.syl_.push_back({g, e});
    return w;
  }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }

  // Total letter count (sum of |exp|).
  i64 length() const {
    i64 n = 0;
    for (const auto& s : syl_) n = checked_add(n, s.exp < 0 ? -s.exp : s.exp);
    return n;
  }

  int max_gen() const {
    int m = -1;
    for (const auto& s : syl_)
      if (s.gen > m) m = s.gen;
    return m;
  }

  Word inverse() const {
    std::vector<Syllable> r;
    r.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
      r.push_back({it->gen, checked_neg(it->exp)});
    return Word(std::move(r));
  }

  friend Word operator*(const Word& a, const Word& b);
  Word pow(i64 n) const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syl_;
};

// Free reduction of a raw syllable sequence; confluent, so the result does
// not depend on cancellation order.
Word free_reduce(const std::vector<Syllable>& raw);

inline Word conjugate(const Word& c, const Word& w) { return c * w * c.inverse(); }
inline Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

struct FreeGroup {
  std::vector<std::string> names;
  int rank() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;  // -1 if absent
  friend bool operator==(const FreeGroup&, const FreeGroup&) = default;
};

// Word syntax shared by all file formats: identifiers, `*` concatenation,
// `^` integer exponents, `[a,b]` commutator sugar, `1` identity.
std::string print_word(const Word& w, const FreeGroup& fg);
Word parse_word(const std::string& text, const FreeGroup& fg, int line_hint = 0);

// Raises if some generator index is outside [0, fg.rank()).
void check_word_over(const Word& w, const FreeGroup& fg);

}  // namespace gdc

#endif
