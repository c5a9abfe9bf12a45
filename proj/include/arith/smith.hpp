#pragma once

#include "arith/matrix.hpp"

namespace arith {

// Smith normal form D = U * A * V with U, V unimodular and
// D diagonal, d_1 | d_2 | ... , all d_i >= 0.
struct SmithForm {
  IMat d;
  IMat u;
  IMat v;

  // Diagonal of d, padded with the zeros that come from rank deficiency.
  std::vector<Int> invariant_factors() const;
};

SmithForm smith_normal_form(const IMat& a);

}  // namespace arith
