#pragma once

#include <set>
#include <vector>

#include "arith/hpoint.hpp"
#include "arith/matrix.hpp"

namespace arith {

// Positive-definite (for the reduction operations) quadratic form
// phi(x) = sum_{i,j} a_ij x_i x_j with a symmetric; the xy-coefficient of a
// binary form a x^2 + b xy + c y^2 is therefore stored as a_12 = b/2.
struct QuadraticForm {
  QMat a;

  QuadraticForm() = default;
  explicit QuadraticForm(QMat coeffs);
  static QuadraticForm binary(const Rat& a2, const Rat& b, const Rat& c);  // ax^2+bxy+cy^2

  size_t dim() const { return a.rows(); }
  Rat evaluate(const std::vector<Int>& x) const;

  bool operator==(const QuadraticForm& o) const { return a == o.a; }
};

struct not_positive_definite : input_error {
  explicit not_positive_definite(size_t idx)
      : input_error("form is not positive definite (pivot t_" + std::to_string(idx) +
                    " <= 0)"),
        pivot_index(idx) {}
  size_t pivot_index;  // 1-based index of the first non-positive pivot
};

// phi(x) = sum_i t_i (x_i + sum_{j>i} u_ij x_j)^2, the unique completion of
// squares of a positive-definite form; u is strictly upper triangular.
struct JacobiDecomposition {
  std::vector<Rat> t;
  QMat u;

  QuadraticForm reconstruct() const;
};

struct ReductionCertificate {
  IMat gamma;             // unimodular witness
  QuadraticForm reduced;  // equals act(gamma, input) exactly
  size_t swap_count = 0;
  // Product of leading principal minors after each swap; strictly decreasing,
  // which is the termination witness.
  std::vector<Rat> swap_potentials;
};

// (gamma . phi)(x) = phi(t(gamma) x); coefficient matrix gamma * a * t(gamma).
QuadraticForm act(const IMat& gamma, const QuadraticForm& phi);

JacobiDecomposition jacobi_decompose(const QuadraticForm& phi);

bool is_positive_definite(const QuadraticForm& phi);

// Certified reduction into the Siegel set |u_ij| <= 1/2 (i < j),
// t_i <= 4/3 t_{i+1}: size reduction plus adjacent swaps whenever
// t_{i+1} + u_{i,i+1}^2 t_i < t_i, all in exact arithmetic.
ReductionCertificate siegel_reduce(const QuadraticForm& phi);

bool in_siegel_set(const QuadraticForm& phi);

// Batch reduction; parallel fans the independent forms across threads and is
// checked against the serial path in the tests.
std::vector<ReductionCertificate> siegel_reduce_batch(const std::vector<QuadraticForm>& forms,
                                                      bool parallel);

// Binary positive-definite phi as a * |z x + y|^2 with z in the upper
// half-plane: a = a_22, Re z = a_12/a_22, (Im z)^2 = a_11/a_22 - (Re z)^2.
struct BinaryPoint {
  Rat scale;
  HPoint z;
};
BinaryPoint binary_to_point(const QuadraticForm& phi);

// All integers k <= bound of the form phi(x), x integral; requires integer
// coefficients and positive definiteness (the search box comes from the
// Jacobi pivots).
std::set<Int> represented_values(const QuadraticForm& phi, const Int& bound);

}  // namespace arith
