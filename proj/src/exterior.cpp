#include "arith/exterior.hpp"

#include <bit>

namespace arith {

ExtVector ExtVector::basis(uint8_t mask, bool dual) {
  ExtVector v;
  v.degree = std::popcount(mask);
  v.dual = dual;
  v.coeffs[mask] = 1;
  return v;
}

ExtVector ExtVector::zero(int degree, bool dual) {
  ExtVector v;
  v.degree = degree;
  v.dual = dual;
  return v;
}

ExtVector& ExtVector::add_term(uint8_t mask, const Rat& c) {
  if (std::popcount(mask) != degree) throw input_error("term degree mismatch");
  auto it = coeffs.find(mask);
  if (it == coeffs.end()) {
    if (c != 0) coeffs.emplace(mask, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
  return *this;
}

ExtVector ExtVector::operator+(const ExtVector& o) const {
  if (degree != o.degree || dual != o.dual) throw input_error("mixed-type exterior sum");
  ExtVector r = *this;
  for (const auto& [m, c] : o.coeffs) r.add_term(m, c);
  return r;
}

ExtVector ExtVector::operator-(const ExtVector& o) const { return *this + (o * Rat(-1)); }

ExtVector ExtVector::operator*(const Rat& s) const {
  ExtVector r = ExtVector::zero(degree, dual);
  if (s == 0) return r;
  for (const auto& [m, c] : coeffs) r.coeffs.emplace(m, c * s);
  return r;
}

bool ExtVector::operator==(const ExtVector& o) const {
  return degree == o.degree && dual == o.dual && coeffs == o.coeffs;
}

std::string ExtVector::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : coeffs) {
    if (!s.empty()) s += " + ";
    s += rat_to_string(c) + "*e";
    for (int i = 0; i < 8; ++i)
      if (m & (1u << i)) s += std::to_string(i + 1);
    if (dual) s += "*";
  }
  return s;
}

int shuffle_sign(uint8_t a, uint8_t b) {
  if (a & b) return 0;
  // inversions: pairs (i in a, j in b) with i > j
  int inv = 0;
  for (int j = 0; j < 8; ++j)
    if (b & (1u << j)) inv += std::popcount(static_cast<uint8_t>(a & ~((2u << j) - 1)));
  return (inv % 2 == 0) ? 1 : -1;
}

ExtVector wedge(const ExtVector& u, const ExtVector& v) {
  if (u.dual != v.dual) throw input_error("wedge of opposite variances");
  if (u.degree + v.degree > 8) throw input_error("wedge degree exceeds 8");
  ExtVector r = ExtVector::zero(u.degree + v.degree, u.dual);
  for (const auto& [ma, ca] : u.coeffs)
    for (const auto& [mb, cb] : v.coeffs) {
      int s = shuffle_sign(ma, mb);
      if (s == 0) continue;
      r.add_term(static_cast<uint8_t>(ma | mb), ca * cb * s);
    }
  return r;
}

Rat det_pairing(const ExtVector& u, const ExtVector& lambda) {
  if (u.degree != lambda.degree) throw input_error("pairing degree mismatch");
  if (u.dual == lambda.dual) throw input_error("pairing needs opposite variances");
  // <e_A, e_B^*> = delta_AB on sorted basis vectors
  Rat s(0);
  for (const auto& [m, c] : u.coeffs) {
    auto it = lambda.coeffs.find(m);
    if (it != lambda.coeffs.end()) s += c * it->second;
  }
  return s;
}

ExtVector complement_dual(const ExtVector& u) {
  ExtVector r = ExtVector::zero(8 - u.degree, !u.dual);
  for (const auto& [m, c] : u.coeffs) {
    uint8_t comp = static_cast<uint8_t>(~m);
    r.add_term(comp, c * shuffle_sign(m, comp));
  }
  return r;
}

ExtVector act_gl8(const QMat& x, const ExtVector& u) {
  if (x.rows() != 8 || x.cols() != 8) throw input_error("act_gl8 needs an 8x8 matrix");
  ExtVector r = ExtVector::zero(u.degree, u.dual);
  for (const auto& [mask, c] : u.coeffs) {
    for (int i = 0; i < 8; ++i) {
      if (!(mask & (1u << i))) continue;
      uint8_t rest = static_cast<uint8_t>(mask & ~(1u << i));
      // sign of pulling e_i to the front of the sorted word
      int pull = std::popcount(static_cast<uint8_t>(rest & ((1u << i) - 1))) % 2 ? -1 : 1;
      for (int j = 0; j < 8; ++j) {
        Rat coef = u.dual ? Rat(-x(i, j)) : x(j, i);
        if (coef == 0) continue;
        if (rest & (1u << j)) continue;  // repeated factor
        int ins = std::popcount(static_cast<uint8_t>(rest & ((1u << j) - 1))) % 2 ? -1 : 1;
        r.add_term(static_cast<uint8_t>(rest | (1u << j)), c * coef * pull * ins);
      }
    }
  }
  return r;
}

}  // namespace arith
