#pragma once

#include <string>

namespace arith {

// Deterministic SVG sketch of the modular fundamental domain: the strip
// |Re z| <= 1/2, the unit-circle arc between its corners, and the images of
// that arc under all freely reduced words in S, T of length <= depth.
// Illustration only; rendering uses doubles, no exactness claims.
std::string plot_fundamental_domain(unsigned depth, double half_width = 2.0,
                                    double height = 2.5);

}  // namespace arith
