#pragma once

#include <initializer_list>
#include <vector>

#include "arith/rational.hpp"

namespace arith {

// Dense row-major matrix over an exact scalar type (Int or Rat).
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Mat(size_t rows, size_t cols, std::initializer_list<T> entries)
      : rows_(rows), cols_(cols), e_(entries) {
    if (e_.size() != rows * cols) throw input_error("matrix initializer size mismatch");
  }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw input_error("matrix product dimension mismatch");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    require_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    require_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }

  Mat operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_square() const { return rows_ == cols_; }

  void swap_rows(size_t a, size_t b) {
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(size_t a, size_t b) {
    for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix shape mismatch");
  }

  size_t rows_, cols_;
  std::vector<T> e_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

inline QMat to_rational(const IMat& m) {
  QMat r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// Exact determinant by fraction-free (Bareiss) elimination; stays integral.
inline Int det(const IMat& a) {
  if (!a.is_square()) throw input_error("determinant of non-square matrix");
  size_t n = a.rows();
  if (n == 0) return 1;
  IMat m = a;
  Int sign(1), prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline Rat det(const QMat& a) {
  if (!a.is_square()) throw input_error("determinant of non-square matrix");
  size_t n = a.rows();
  QMat m = a;
  Rat d(1);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != k) {
      m.swap_rows(k, p);
      d = -d;
    }
    d *= m(k, k);
    Rat inv = Rat(1) / m(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat f = m(i, k) * inv;
      for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

inline bool is_unimodular(const IMat& g) {
  if (!g.is_square()) return false;
  Int d = det(g);
  return d == 1 || d == -1;
}

// Inverse of a rational matrix; throws on singular input.
inline QMat inverse(const QMat& a) {
  if (!a.is_square()) throw input_error("inverse of non-square matrix");
  size_t n = a.rows();
  QMat m = a, inv = QMat::identity(n);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw input_error("singular matrix has no inverse");
    if (p != k) {
      m.swap_rows(k, p);
      inv.swap_rows(k, p);
    }
    Rat piv = Rat(1) / m(k, k);
    for (size_t j = 0; j < n; ++j) {
      m(k, j) *= piv;
      inv(k, j) *= piv;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rat f = m(i, k);
      for (size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// Inverse of a unimodular integer matrix (integral by Cramer).
inline IMat inverse_unimodular(const IMat& g) {
  if (!is_unimodular(g)) throw input_error("matrix is not unimodular");
  QMat qi = inverse(to_rational(g));
  IMat r(g.rows(), g.cols());
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j) {
      if (!is_integer(qi(i, j))) throw integrity_error("unimodular inverse not integral");
      r(i, j) = qi(i, j).get_num();
    }
  return r;
}

inline IMat pow(const IMat& g, const Int& e) {
  if (!g.is_square()) throw input_error("power of non-square matrix");
  if (e < 0) return pow(inverse_unimodular(g), -e);
  IMat base = g, r = IMat::identity(g.rows());
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

}  // namespace arith
