#include "gdc/word.hpp"

#include <cctype>

namespace gdc {

Word free_reduce(const std::vector<Syllable>& raw) {
  std::vector<Syllable> out;
  for (const auto& s : raw) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp = checked_add(out.back().exp, s.exp);
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  // A single left-to-right pass suffices: merging can only expose a new
  // cancellation at the seam, which the pop_back handles immediately.
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> raw = a.syllables();
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return free_reduce(raw);
}

Word Word::pow(i64 n) const {
  if (n == 0) return Word();
  Word base = n > 0 ? *this : inverse();
  i64 k = n > 0 ? n : checked_neg(n);
  Word acc;
  for (i64 i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

int FreeGroup::index_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

void check_word_over(const Word& w, const FreeGroup& fg) {
  for (const auto& s : w.syllables())
    if (s.gen < 0 || s.gen >= fg.rank())
      throw std::out_of_range("word uses generator index " + std::to_string(s.gen) +
                              " outside free group of rank " + std::to_string(fg.rank()));
}

std::string print_word(const Word& w, const FreeGroup& fg) {
  if (w.is_identity()) return "1";
  std::string out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out += "*";
    first = false;
    out += fg.names.at(static_cast<size_t>(s.gen));
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

namespace {

struct WordLexer {
  const std::string& text;
  size_t pos = 0;
  int line;
  explicit WordLexer(const std::string& t, int line_) : text(t), line(line_) {}

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, line, static_cast<int>(pos) + 1);
  }
  i64 read_int() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stoll(text.substr(start, pos - start));
  }
  std::string read_ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '\''))
      ++pos;
    if (pos == start) fail("expected identifier");
    return text.substr(start, pos - start);
  }
};

// word     := factor (('*')? factor)*        -- '*' optional only before '['
// factor   := atom ('^' int)?
// atom     := '1' | ident | '[' word ',' word ']' | '(' word ')'
Word parse_factor(WordLexer& lx, const FreeGroup& fg);

Word parse_word_expr(WordLexer& lx, const FreeGroup& fg) {
  Word acc = parse_factor(lx, fg);
  while (true) {
    char c = lx.peek();
    if (c == '*') {
      ++lx.pos;
      acc = acc * parse_factor(lx, fg);
    } else if (c == '[' || c == '(') {
      acc = acc * parse_factor(lx, fg);
    } else {
      break;
    }
  }
  return acc;
}

Word parse_factor(WordLexer& lx, const FreeGroup& fg) {
  Word base;
  char c = lx.peek();
  if (c == '\0') lx.fail("unexpected end of word");
  if (c == '[') {
    ++lx.pos;
    Word a = parse_word_expr(lx, fg);
    if (lx.peek() != ',') lx.fail("expected ',' in commutator");
    ++lx.pos;
    Word b = parse_word_expr(lx, fg);
    if (lx.peek() != ']') lx.fail("expected ']' in commutator");
    ++lx.pos;
    base = commutator(a, b);
  } else if (c == '(') {
    ++lx.pos;
    base = parse_word_expr(lx, fg);
    if (lx.peek() != ')') lx.fail("expected ')'");
    ++lx.pos;
  } else if (c == '1' &&
             (lx.pos + 1 >= lx.text.size() ||
              !std::isalnum(static_cast<unsigned char>(lx.text[lx.pos + 1])))) {
    ++lx.pos;
    base = Word();
  } else {
    std::string name = lx.read_ident();
    int g = fg.index_of(name);
    if (g < 0) lx.fail("unknown generator '" + name + "'");
    base = Word::gen(g);
  }
  if (lx.peek() == '^') {
    ++lx.pos;
    base = base.pow(lx.read_int());
  }
  return base;
}

}  // namespace

Word parse_word(const std::string& text, const FreeGroup& fg, int line_hint) {
  WordLexer lx(text, line_hint);
  if (lx.eof()) throw parse_error("empty word", line_hint, 1);
  Word w = parse_word_expr(lx, fg);
  if (!lx.eof()) lx.fail("trailing characters after word");
  return w;
}

}  // namespace gdc
