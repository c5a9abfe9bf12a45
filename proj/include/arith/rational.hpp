#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>

namespace arith {

// Exact scalars. Int is an arbitrary-precision integer, Rat a rational kept
// in canonical form (gcd(|num|, den) = 1, den >= 1, zero is 0/1); mpq_class
// maintains exactly that invariant as long as values are built through the
// helpers below.
using Int = mpz_class;
using Rat = mpq_class;

struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Signals a broken internal invariant (never a bad input).
struct integrity_error : std::logic_error {
  explicit integrity_error(const std::string& what) : std::logic_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Wire format: "p/q", or "p" when q = 1.
inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw input_error("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw input_error("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// Nearest integer; exact halves round up. |q - round_rat(q)| <= 1/2 always.
inline Int round_rat(const Rat& q) {
  return floor_rat(q + Rat(1, 2));
}

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// n = square * squarefree, squarefree part second.
inline std::pair<Int, Int> squarefree_decompose(Int n) {
  if (n <= 0) throw input_error("squarefree_decompose needs a positive integer");
  Int square_root(1), squarefree(1);
  for (Int d(2); d * d <= n; ++d) {
    unsigned mult = 0;
    while (divides(d, n)) {
      n /= d;
      ++mult;
    }
    for (unsigned i = 0; i + 1 < mult; i += 2) square_root *= d;
    if (mult % 2 == 1) squarefree *= d;
  }
  squarefree *= n;  // leftover is prime (or 1), hence squarefree
  return {square_root, squarefree};
}

inline unsigned long to_ulong(const Int& n) {
  if (!n.fits_ulong_p()) throw input_error("integer out of range: " + n.get_str());
  return n.get_ui();
}

}  // namespace arith
