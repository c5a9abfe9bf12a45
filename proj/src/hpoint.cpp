#include "arith/hpoint.hpp"

namespace arith {

HPoint::HPoint(Rat real, Rat coeff, Int radicand)
    : re(std::move(real)), im_coeff(std::move(coeff)), im_radicand(std::move(radicand)) {
  if (im_coeff <= 0) throw input_error("HPoint needs Im(z) > 0");
  if (im_radicand <= 0) throw input_error("HPoint radicand must be positive");
  auto [sq, sf] = squarefree_decompose(im_radicand);
  if (sq != 1) {  // normalize r*sqrt(f^2 s) to (r f)*sqrt(s)
    im_coeff *= Rat(sq);
    im_radicand = sf;
  }
}

HPoint HPoint::from_im_squared(const Rat& real, const Rat& im_sq) {
  if (im_sq <= 0) throw input_error("point not in the upper half-plane (Im^2 <= 0)");
  // sqrt(p/q) = sqrt(p q)/q; split p q into square * squarefree.
  Int pq = im_sq.get_num() * im_sq.get_den();
  auto [sq, sf] = squarefree_decompose(pq);
  return HPoint(real, make_rat(sq, im_sq.get_den()), sf);
}

Rat HPoint::im_squared() const { return im_coeff * im_coeff * Rat(im_radicand); }

Rat HPoint::norm_squared() const { return re * re + im_squared(); }

std::string HPoint::to_string() const {
  std::string s = rat_to_string(re) + " + " + rat_to_string(im_coeff);
  if (im_radicand != 1) s += "*sqrt(" + im_radicand.get_str() + ")";
  return s + "*i";
}

}  // namespace arith
