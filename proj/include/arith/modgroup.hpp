#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arith/hpoint.hpp"
#include "arith/matrix.hpp"

namespace arith {

// Element of SL2(Z); ad - bc = 1 is checked at construction.
struct SL2 {
  Int a, b, c, d;

  SL2() : a(1), b(0), c(0), d(1) {}
  SL2(Int a_, Int b_, Int c_, Int d_);

  static SL2 shear(const Int& n);      // T^n = [[1, n], [0, 1]]
  static SL2 inversion();              // S = [[0, -1], [1, 0]]

  SL2 operator*(const SL2& o) const;
  SL2 inverse() const { return SL2(d, -b, -c, a); }
  SL2 negated() const { return SL2(-a, -b, -c, -d); }
  bool operator==(const SL2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

  IMat to_matrix() const;
  static SL2 from_matrix(const IMat& m);
};

// Word in the generators S and T; tokens multiply left to right as matrices.
enum class Token { S, T, TInv };

struct GeneratorWord {
  std::vector<Token> tokens;

  void push(Token t);  // keeps the word freely reduced (T T^-1 and S S collapse)
  SL2 evaluate() const;
  std::string to_string() const;  // "S T T^-1 ..."
};

// gamma(z) = (a z + b)/(c z + d); exact, and the radicand of Im is preserved.
HPoint moebius(const SL2& gamma, const HPoint& z);

// Reduction into the fundamental domain |Re z| <= 1/2, |z| >= 1; the word
// multiplies out to gamma and moebius(gamma, input) == z exactly.
struct DomainReduction {
  SL2 gamma;
  HPoint z;
  GeneratorWord word;
};
DomainReduction reduce_to_domain(const HPoint& z);

// Word in S, T whose product is gamma up to the center ("+-Id"); obtained by
// reducing gamma(2i) back to 2i, an interior point with trivial stabilizer.
GeneratorWord decompose_st(const SL2& gamma);

// Every entry of gamma - I divisible by a (any square integer matrix).
bool in_congruence_subgroup(const IMat& gamma, const Int& a);

// Least k with gamma^k = I, or nullopt for infinite order. Any finite order
// divides the Minkowski bound m(N), so only divisors of m(N) are probed.
std::optional<Int> element_order(const IMat& gamma);

// For p >= 3 prime and gamma in the principal congruence subgroup mod p,
// gamma != I: certifies the element has infinite order.
struct TorsionFreeVerdict {
  bool infinite_order = false;
  std::string witness;
};
TorsionFreeVerdict verify_torsion_free_mod_p(const Int& p, const IMat& gamma);

// True iff no nonempty freely reduced word of length <= max_len in the
// generators and their inverses evaluates to the identity.
bool free_word_check(const std::vector<SL2>& generators, unsigned max_len);

}  // namespace arith
