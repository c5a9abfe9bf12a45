#include "arith/smith.hpp"

#include <cstdlib>

namespace arith {

namespace {

// Row op: row_i += c * row_j, mirrored into u so that d = u*a*v stays true.
void row_add(IMat& d, IMat& u, size_t i, size_t j, const Int& c) {
  for (size_t k = 0; k < d.cols(); ++k) d(i, k) += c * d(j, k);
  for (size_t k = 0; k < u.cols(); ++k) u(i, k) += c * u(j, k);
}

void col_add(IMat& d, IMat& v, size_t i, size_t j, const Int& c) {
  for (size_t k = 0; k < d.rows(); ++k) d(k, i) += c * d(k, j);
  for (size_t k = 0; k < v.rows(); ++k) v(k, i) += c * v(k, j);
}

void row_negate(IMat& d, IMat& u, size_t i) {
  for (size_t k = 0; k < d.cols(); ++k) d(i, k) = -d(i, k);
  for (size_t k = 0; k < u.cols(); ++k) u(i, k) = -u(i, k);
}

}  // namespace

std::vector<Int> SmithForm::invariant_factors() const {
  size_t n = std::min(d.rows(), d.cols());
  std::vector<Int> f(n);
  for (size_t i = 0; i < n; ++i) f[i] = d(i, i);
  return f;
}

SmithForm smith_normal_form(const IMat& a) {
  size_t m = a.rows(), n = a.cols();
  SmithForm s{a, IMat::identity(m), IMat::identity(n)};
  IMat& d = s.d;

  size_t t = 0;
  while (t < m && t < n) {
    // Find a pivot in the remaining block.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < m && !found; ++i)
      for (size_t j = t; j < n && !found; ++j)
        if (d(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) {
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
    }
    if (pj != t) {
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);
    }

    for (;;) {
      // Euclidean reduction of column t, then row t, against the pivot.
      bool dirty = false;
      for (size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_add(d, s.u, i, t, -q);
        if (d(i, t) != 0) {
          // remainder strictly smaller than |pivot|; promote it
          d.swap_rows(t, i);
          s.u.swap_rows(t, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_add(d, s.v, j, t, -q);
        if (d(t, j) != 0) {
          d.swap_cols(t, j);
          s.v.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Pivot now clears its row and column. Enforce that it divides the
      // rest of the block, else fold an offending row in and redo.
      bool fixed = true;
      for (size_t i = t + 1; i < m && fixed; ++i)
        for (size_t j = t + 1; j < n && fixed; ++j)
          if (!divides(d(t, t), d(i, j))) {
            row_add(d, s.u, t, i, Int(1));
            fixed = false;
          }
      if (fixed) break;
    }

    if (d(t, t) < 0) row_negate(d, s.u, t);
    ++t;
  }

  return s;
}

}  // namespace arith
