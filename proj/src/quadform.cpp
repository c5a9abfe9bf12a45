#include "arith/quadform.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arith {

QuadraticForm::QuadraticForm(QMat coeffs) : a(std::move(coeffs)) {
  if (!a.is_square()) throw input_error("quadratic form needs a square coefficient matrix");
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) throw input_error("quadratic form matrix must be symmetric");
}

QuadraticForm QuadraticForm::binary(const Rat& a2, const Rat& b, const Rat& c) {
  QMat m(2, 2);
  m(0, 0) = a2;
  m(0, 1) = m(1, 0) = b / 2;
  m(1, 1) = c;
  return QuadraticForm(m);
}

Rat QuadraticForm::evaluate(const std::vector<Int>& x) const {
  if (x.size() != dim()) throw input_error("evaluation point has wrong dimension");
  Rat v(0);
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) v += a(i, j) * Rat(x[i] * x[j]);
  return v;
}

QuadraticForm act(const IMat& gamma, const QuadraticForm& phi) {
  if (gamma.rows() != phi.dim() || gamma.cols() != phi.dim())
    throw input_error("acting matrix has wrong dimension");
  if (!is_unimodular(gamma)) throw input_error("acting matrix must be unimodular");
  QMat g = to_rational(gamma);
  return QuadraticForm(g * phi.a * g.transpose());
}

JacobiDecomposition jacobi_decompose(const QuadraticForm& phi) {
  size_t n = phi.dim();
  JacobiDecomposition jd;
  jd.t.resize(n);
  jd.u = QMat(n, n);

  QMat s = phi.a;  // shrinking Schur complement, top-left at k
  for (size_t k = 0; k < n; ++k) {
    if (s(k, k) <= 0) throw not_positive_definite(k + 1);
    jd.t[k] = s(k, k);
    for (size_t j = k + 1; j < n; ++j) jd.u(k, j) = s(k, j) / s(k, k);
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) s(i, j) -= s(k, i) * s(k, j) / s(k, k);
  }
  return jd;
}

QuadraticForm JacobiDecomposition::reconstruct() const {
  size_t n = t.size();
  QMat r = QMat::identity(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) r(i, j) = u(i, j);
  QMat d(n, n);
  for (size_t i = 0; i < n; ++i) d(i, i) = t[i];
  return QuadraticForm(r.transpose() * d * r);
}

bool is_positive_definite(const QuadraticForm& phi) {
  try {
    jacobi_decompose(phi);
    return true;
  } catch (const not_positive_definite&) {
    return false;
  }
}

namespace {

// Leading-principal-minor product, the quantity that strictly drops at swaps.
Rat minor_product(const QMat& a) {
  Rat p(1), acc(1);
  QMat m = a;
  size_t n = a.rows();
  for (size_t k = 0; k < n; ++k) {
    acc *= m(k, k);
    p *= acc;
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m(i, j) -= m(k, i) * m(k, j) / m(k, k);
  }
  return p;
}

}  // namespace

ReductionCertificate siegel_reduce(const QuadraticForm& phi) {
  size_t n = phi.dim();
  jacobi_decompose(phi);  // rejects non-positive-definite input up front

  ReductionCertificate cert;
  cert.gamma = IMat::identity(n);
  QMat a = phi.a;

  // Basis ops mirrored on the Gram matrix: a <- e a e^t, gamma <- e gamma.
  auto shear = [&](size_t dst, size_t src, const Int& c) {
    // b_dst += c * b_src
    for (size_t k = 0; k < n; ++k) a(dst, k) += Rat(c) * a(src, k);
    for (size_t k = 0; k < n; ++k) a(k, dst) += Rat(c) * a(k, src);
    for (size_t k = 0; k < n; ++k) cert.gamma(dst, k) += c * cert.gamma(src, k);
  };
  auto swap = [&](size_t i) {
    a.swap_rows(i, i + 1);
    a.swap_cols(i, i + 1);
    cert.gamma.swap_rows(i, i + 1);
  };

  if (n >= 2) {
    size_t k = 1;
    while (k < n) {
      // size-reduce basis vector k against k-1 .. 0, nearest first; a shear
      // at position j only perturbs the coefficients at positions < j, so
      // refreshing the decomposition per step settles the whole row. The
      // inequalities are closed: |u| = 1/2 exactly is left alone.
      Rat half(1, 2);
      for (size_t j = k; j-- > 0;) {
        JacobiDecomposition jd = jacobi_decompose(QuadraticForm(a));
        if (abs_rat(jd.u(j, k)) <= half) continue;
        Int c = round_rat(jd.u(j, k));
        if (c != 0) shear(k, j, -c);
      }
      JacobiDecomposition jd = jacobi_decompose(QuadraticForm(a));

      // swap when t_k + u_{k-1,k}^2 t_{k-1} < t_{k-1}
      Rat lhs = jd.t[k] + jd.u(k - 1, k) * jd.u(k - 1, k) * jd.t[k - 1];
      if (lhs < jd.t[k - 1]) {
        swap(k - 1);
        ++cert.swap_count;
        cert.swap_potentials.push_back(minor_product(a));
        k = k > 1 ? k - 1 : 1;
      } else {
        ++k;
      }
    }
  }

  cert.reduced = QuadraticForm(a);
  return cert;
}

bool in_siegel_set(const QuadraticForm& phi) {
  JacobiDecomposition jd = jacobi_decompose(phi);
  size_t n = phi.dim();
  Rat half(1, 2), four_thirds(4, 3);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (abs_rat(jd.u(i, j)) > half) return false;
  for (size_t i = 0; i + 1 < n; ++i)
    if (jd.t[i] > four_thirds * jd.t[i + 1]) return false;
  return true;
}

std::vector<ReductionCertificate> siegel_reduce_batch(const std::vector<QuadraticForm>& forms,
                                                      bool parallel) {
  std::vector<ReductionCertificate> out(forms.size());
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < (long)forms.size(); ++i) out[i] = siegel_reduce(forms[i]);
  } else {
    for (size_t i = 0; i < forms.size(); ++i) out[i] = siegel_reduce(forms[i]);
  }
  return out;
}

BinaryPoint binary_to_point(const QuadraticForm& phi) {
  if (phi.dim() != 2) throw input_error("binary_to_point needs a 2-variable form");
  jacobi_decompose(phi);  // rejects non-positive-definite input
  Rat scale = phi.a(1, 1);
  Rat re = phi.a(0, 1) / scale;
  Rat im_sq = phi.a(0, 0) / scale - re * re;
  return BinaryPoint{scale, HPoint::from_im_squared(re, im_sq)};
}

namespace {

void enumerate_values(const JacobiDecomposition& jd, const QuadraticForm& phi,
                      std::vector<Int>& x, size_t unset, const Rat& budget,
                      std::set<Int>& out) {
  if (unset == 0) {
    Rat v = phi.evaluate(x);
    out.insert(v.get_num());
    return;
  }
  size_t n = jd.t.size();
  size_t level = unset - 1;  // coordinates level+1 .. n-1 are already fixed
  // t_level * (x_level + c)^2 <= budget, c determined by later coordinates;
  // the admissible x_level form a contiguous interval around -c.
  Rat c(0);
  for (size_t j = level + 1; j < n; ++j) c += jd.u(level, j) * Rat(x[j]);
  Int center = round_rat(-c);
  for (Int m = center;; --m) {
    Rat term = (Rat(m) + c) * (Rat(m) + c) * jd.t[level];
    if (term > budget) break;
    x[level] = m;
    enumerate_values(jd, phi, x, level, budget - term, out);
  }
  for (Int m = center + 1;; ++m) {
    Rat term = (Rat(m) + c) * (Rat(m) + c) * jd.t[level];
    if (term > budget) break;
    x[level] = m;
    enumerate_values(jd, phi, x, level, budget - term, out);
  }
}

}  // namespace

std::set<Int> represented_values(const QuadraticForm& phi, const Int& bound) {
  for (size_t i = 0; i < phi.dim(); ++i)
    for (size_t j = 0; j < phi.dim(); ++j)
      if (!is_integer(phi.a(i, j)))
        throw input_error("represented_values needs integer coefficients");
  if (bound < 0) throw input_error("bound must be nonnegative");
  JacobiDecomposition jd = jacobi_decompose(phi);

  std::set<Int> out;
  std::vector<Int> x(phi.dim(), Int(0));
  enumerate_values(jd, phi, x, phi.dim(), Rat(bound), out);
  return out;
}

}  // namespace arith
