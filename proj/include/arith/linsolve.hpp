#pragma once

#include <vector>

#include "arith/matrix.hpp"

namespace arith {

// Exact solution of A x = b. When consistent, particular is one solution and
// kernel spans the solution set's direction space; the residual A x - b is
// exactly zero, never approximately.
struct LinearSolution {
  bool consistent = false;
  QMat particular;             // cols(A) x 1
  std::vector<QMat> kernel;    // each cols(A) x 1
};

LinearSolution solve_exact(const QMat& a, const QMat& b);

}  // namespace arith
