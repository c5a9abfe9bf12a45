#pragma once

#include <string>

#include "arith/rational.hpp"

namespace arith {

// Exact point of the upper half-plane: z = re + i * im_coeff * sqrt(im_radicand),
// with im_coeff > 0 and im_radicand squarefree. This covers every point whose
// imaginary part is a positive rational multiple of a fixed quadratic surd,
// which is closed under the integral Moebius action (the radicand never changes).
struct HPoint {
  Rat re;
  Rat im_coeff;
  Int im_radicand;

  HPoint() : re(0), im_coeff(1), im_radicand(1) {}
  HPoint(Rat real, Rat coeff, Int radicand);

  // Point with Im(z)^2 = im_sq > 0 (the radicand is extracted exactly).
  static HPoint from_im_squared(const Rat& real, const Rat& im_sq);

  Rat im_squared() const;     // im_coeff^2 * im_radicand
  Rat norm_squared() const;   // re^2 + Im^2, exact

  bool operator==(const HPoint& o) const {
    return re == o.re && im_coeff == o.im_coeff && im_radicand == o.im_radicand;
  }
  bool operator!=(const HPoint& o) const { return !(*this == o); }

  std::string to_string() const;  // "re + im*sqrt(s)*i"
};

}  // namespace arith
