#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "arith/matrix.hpp"

namespace arith {

// Alternating tensor over an 8-dimensional space W (or its dual, flagged by
// `dual`). A degree-k basis vector e_{i1} ^ ... ^ e_{ik}, i1 < ... < ik, is
// keyed by the bitmask of its index set; zero coefficients are never stored.
struct ExtVector {
  int degree = 0;
  bool dual = false;
  std::map<uint8_t, Rat> coeffs;

  static ExtVector basis(uint8_t mask, bool dual = false);
  static ExtVector zero(int degree, bool dual = false);

  ExtVector& add_term(uint8_t mask, const Rat& c);  // erases cancelled terms
  bool is_zero() const { return coeffs.empty(); }

  ExtVector operator+(const ExtVector& o) const;
  ExtVector operator-(const ExtVector& o) const;
  ExtVector operator*(const Rat& s) const;
  ExtVector operator-() const { return *this * Rat(-1); }
  bool operator==(const ExtVector& o) const;

  std::string to_string() const;
};

// Sign of the shuffle sorting (sorted A, sorted B) into ascending order,
// for disjoint index masks; 0 if the masks overlap.
int shuffle_sign(uint8_t a, uint8_t b);

// Exterior product; both factors must have the same variance.
ExtVector wedge(const ExtVector& u, const ExtVector& v);

// <v_1^...^v_k, l_1^...^l_k> = det(l_j(v_i)); the degrees must agree and the
// variances must be opposite.
Rat det_pairing(const ExtVector& u, const ExtVector& lambda);

// The isomorphism Lambda^k -> Lambda^{8-k} of opposite variance induced by
// wedging to the top power (e_{1..8} = 1): e_A -> sign(A, A^c) e_{A^c}^*.
ExtVector complement_dual(const ExtVector& u);

// Derivation action of an 8x8 matrix: on W, e_i -> sum_j X_ji e_j; on W*,
// the dual action e_i^* -> -sum_k X_ik e_k^*.
ExtVector act_gl8(const QMat& x, const ExtVector& u);

}  // namespace arith
