#ifndef CURV22_MATRIX_HPP
#define CURV22_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "curv22/errors.hpp"
#include "curv22/poly1.hpp"
#include "curv22/scalar.hpp"

namespace curv22 {

/// Dense square matrix, row-major. The dimension is fixed at construction.
/// T is Scalar for numeric work and Poly4/Poly1 for symbolic work.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(Scalar(0))) {}
  Matrix(std::size_t n, std::initializer_list<T> rowmajor) : n_(n), data_(rowmajor) {
    if (data_.size() != n * n) throw InvalidArgument("Matrix: wrong number of entries");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(Scalar(1));
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  T trace() const {
    T acc(Scalar(0));
    for (std::size_t i = 0; i < n_; ++i) acc += (*this)(i, i);
    return acc;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Scalar& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  Matrix operator-() const {
    Matrix r = *this;
    r *= Scalar(-1);
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  /// Matrix-vector product.
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != n_) throw InvalidArgument("Matrix::apply: dimension mismatch");
    std::vector<T> out(n_, T(Scalar(0)));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (o.n_ != n_) throw InvalidArgument("Matrix: dimension mismatch");
  }
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using Mat = Matrix<Scalar>;

/// Characteristic polynomial coefficients of det(x*I - m), ascending, monic,
/// via Faddeev-LeVerrier. Only divisions by the integers 1..n occur, so this
/// works over any Q-algebra (Scalar, Poly4).
template <class T>
std::vector<T> char_poly_coefficients(const Matrix<T>& m) {
  const std::size_t n = m.size();
  std::vector<T> c(n + 1, T(Scalar(0)));
  c[n] = T(Scalar(1));
  Matrix<T> mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    T tr = (m * mk).trace();
    c[n - k] = tr * Scalar(-1) / Scalar(static_cast<long>(k));
  }
  return c;
}

Poly1 char_poly(const Mat& m);

/// Exact rank by fraction-free (Bareiss) elimination over Q(sqrt 2).
std::size_t rank(const Mat& m);

Scalar determinant(const Mat& m);

/// Basis of the right kernel {x : m x = 0}.
std::vector<std::vector<Scalar>> kernel_basis(const Mat& m);

/// p(m) by Horner's rule.
Mat evaluate_at(const Poly1& p, const Mat& m);

std::string to_string(const Mat& m);

}  // namespace curv22

#endif  // CURV22_MATRIX_HPP
