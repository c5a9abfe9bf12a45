#include "arith/linsolve.hpp"

namespace arith {

LinearSolution solve_exact(const QMat& a, const QMat& b) {
  if (b.cols() != 1 || b.rows() != a.rows())
    throw input_error("solve_exact: right-hand side must be a column of matching height");

  size_t m = a.rows(), n = a.cols();
  QMat w(m, n + 1);  // augmented [A | b]
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n) = b(i, 0);
  }

  // Gauss-Jordan to reduced row echelon form.
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && w(p, col) == 0) ++p;
    if (p == m) continue;
    if (p != row) w.swap_rows(p, row);
    Rat inv = Rat(1) / w(row, col);
    for (size_t j = col; j <= n; ++j) w(row, j) *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || w(i, col) == 0) continue;
      Rat f = w(i, col);
      for (size_t j = col; j <= n; ++j) w(i, j) -= f * w(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolution sol;
  for (size_t i = row; i < m; ++i)
    if (w(i, n) != 0) return sol;  // 0 = nonzero: inconsistent
  sol.consistent = true;

  sol.particular = QMat(n, 1);
  for (size_t r = 0; r < pivot_col.size(); ++r) sol.particular(pivot_col[r], 0) = w(r, n);

  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    QMat k(n, 1);
    k(c, 0) = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) k(pivot_col[r], 0) = -w(r, c);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

}  // namespace arith
