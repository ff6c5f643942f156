#ifndef GDC_BASICS_HPP
#define GDC_BASICS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gdc {

using i64 = std::int64_t;

// All integer arithmetic in the library is exact: overflow is an error,
// never a wraparound.
struct overflow_error : std::runtime_error {
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
  int line, col;
  parse_error(const std::string& what, int line_, int col_)
      : std::runtime_error(what + " (line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

struct ring_mismatch : std::runtime_error {
  explicit ring_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a computation exceeds its configured work cap.  Callers turn
// this into an "undecided" verdict; it must never be swallowed into a yes/no.
struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in +");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in -");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in *");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

// Three-valued result for the semi-decidable questions.  "undecided" is a
// first-class answer, distinct from both yes and no.
enum class Decision { yes, no, undecided };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    default: return "undecided";
  }
}

// Cooperative cancellation / work cap shared by the long-running searches
// (Groebner completion, homotopy solving).  tick() is called in inner loops.
struct WorkBudget {
  i64 remaining = 50'000'000;
  bool cancelled = false;
  void tick(i64 cost = 1) {
    if (cancelled) throw cap_error("computation cancelled");
    remaining -= cost;
    if (remaining < 0) throw cap_error("work cap exceeded");
  }
};

}  // namespace gdc

#endif
