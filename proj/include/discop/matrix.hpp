#pragma once

#include "discop/hpoly.hpp"
#include "discop/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace discop {

template <class R>
using Vec = std::vector<R>;

// Dense rectangular matrix over an exact scalar ring (Rational or HPoly).
template <class R>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, R(0)) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  R& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const R& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik == R(0)) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == R(0)) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
  }

  Vec<R> apply(const Vec<R>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector size mismatch");
    Vec<R> y(rows_, R(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) == R(0) || x[j] == R(0)) continue;
        y[i] += (*this)(i, j) * x[j];
      }
    return y;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == R(0))) return false;
    return true;
  }

  Vec<R> col(size_t j) const {
    Vec<R> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<R> row(size_t i) const {
    Vec<R> v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  // row i += c * row j
  void add_row(size_t i, size_t j, const R& c) {
    for (size_t k = 0; k < cols_; ++k)
      (*this)(i, k) += c * (*this)(j, k);
  }
  // col i += c * col j
  void add_col(size_t i, size_t j, const R& c) {
    for (size_t k = 0; k < rows_; ++k)
      (*this)(k, i) += c * (*this)(k, j);
  }
  void scale_row(size_t i, const R& c) {
    for (size_t k = 0; k < cols_; ++k) (*this)(i, k) *= c;
  }
  void scale_col(size_t j, const R& c) {
    for (size_t k = 0; k < rows_; ++k) (*this)(k, j) *= c;
  }

  // Columns of `b` appended to the right of `a`.
  static Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat shape mismatch");
    Matrix c(a.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
      for (size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
      for (size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
    }
    return c;
  }

 private:
  size_t rows_, cols_;
  std::vector<R> a_;
};

// The handful of Euclidean-ring operations the normal-form algorithms need,
// instantiated for the two scalar rings in use.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_unit(const Rational& x) { return x != 0; }
  // Every nonzero element of a field has Euclidean size 0.
  static int euclidean_size(const Rational& x) { return x == 0 ? -1 : 0; }
  static std::pair<Rational, Rational> divmod(const Rational& a,
                                              const Rational& b) {
    return {a / b, Rational(0)};
  }
  static Rational exact_div(const Rational& a, const Rational& b) {
    return a / b;
  }
  static bool divides(const Rational& b, const Rational& a) {
    return b != 0 || a == 0;
  }
  // x = unit * canonical; canonical form of a nonzero rational is 1.
  static Rational canonical_unit(const Rational& x) { return x; }
  static Rational inverse_unit(const Rational& u) { return 1 / u; }
};

template <>
struct RingTraits<HPoly> {
  static bool is_zero(const HPoly& x) { return x.is_zero(); }
  static bool is_unit(const HPoly& x) { return x.is_unit(); }
  static int euclidean_size(const HPoly& x) { return x.degree(); }
  static std::pair<HPoly, HPoly> divmod(const HPoly& a, const HPoly& b) {
    return HPoly::divmod(a, b);
  }
  static HPoly exact_div(const HPoly& a, const HPoly& b) {
    return HPoly::exact_div(a, b);
  }
  static bool divides(const HPoly& b, const HPoly& a) {
    return HPoly::divides(b, a);
  }
  // x = leading coefficient * monic part.
  static HPoly canonical_unit(const HPoly& x) { return HPoly(x.leading()); }
  static HPoly inverse_unit(const HPoly& u) {
    if (!u.is_unit()) throw std::invalid_argument("not a unit in Q[h]");
    return HPoly(Rational(1) / u.at_zero());
  }
};

inline Matrix<HPoly> to_hpoly_matrix(const Matrix<Rational>& a) {
  Matrix<HPoly> m(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = HPoly(a(i, j));
  return m;
}

}  // namespace discop
