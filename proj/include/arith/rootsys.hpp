#pragma once

#include <string>
#include <vector>

#include "arith/matrix.hpp"

namespace arith {

using Vec = std::vector<Rat>;

// Root system generated from simple-root data by closing under the simple
// reflections. Coordinates live in an ambient rational space; the inner
// product is `form_scale` times the dot product (the scale drops out of every
// Cartan integer and only affects absolute root lengths).
class RootSystem {
 public:
  static RootSystem generate(std::vector<Vec> simple_roots, Rat form_scale = Rat(1));

  size_t rank() const { return simple_.size(); }
  const std::vector<Vec>& simple_roots() const { return simple_; }
  const std::vector<Vec>& roots() const { return roots_; }

  Rat inner(const Vec& x, const Vec& y) const;
  // 2 (lambda, alpha) / (alpha, alpha)
  Rat cartan_pairing(const Vec& lambda, const Vec& alpha) const;

  IMat cartan_matrix() const;  // C_ij = <alpha_i, alpha_j^v>
  Int weight_lattice_index() const;  // [L1 : L0] = |det C|

  // Fundamental weight w_i (in the span of the simple roots):
  // cartan_pairing(w_i, alpha_j) = delta_ij.
  Vec fundamental_weight(size_t i) const;

  // Coordinates of v in the simple-root basis; input error if v is outside
  // the span.
  Vec simple_root_coordinates(const Vec& v) const;

  bool contains_root(const Vec& v) const;

 private:
  RootSystem() = default;
  std::vector<Vec> simple_;
  std::vector<Vec> roots_;
  Rat scale_{1};
};

// Simple roots of the classical/exceptional series in their standard
// coordinate realizations.
std::vector<Vec> simple_roots_A(unsigned n);
std::vector<Vec> simple_roots_D(unsigned n);
std::vector<Vec> simple_roots_E(unsigned n);  // n in {6, 7, 8}

// The E7 simple roots realized inside the sum-zero hyperplane of Q^8
// (eps_1 - eps_2, eps_4 + eps_5 + eps_6 + eps_7, eps_2 - eps_3, ...), each
// vector projected to mean zero. With the Killing normalization (scale 1/12)
// every root has squared length 1/6.
std::vector<Vec> e7_simple_roots();
Rat e7_killing_scale();  // 1/12

// Parses "A3", "D4", "E7", ... into a generated root system.
RootSystem root_system_by_name(const std::string& name);

}  // namespace arith
