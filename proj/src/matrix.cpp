#include "curv22/matrix.hpp"

#include <sstream>
#include <utility>

namespace curv22 {

Poly1 char_poly(const Mat& m) { return Poly1(char_poly_coefficients(m)); }

namespace {

// Bareiss elimination in place; returns the rank and the sign of the row
// permutation.
std::size_t bareiss(Mat& a, int& perm_sign, Scalar& last_pivot) {
  const std::size_t n = a.size();
  perm_sign = 1;
  Scalar prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
      perm_sign = -perm_sign;
    }
    const Scalar p = a(row, col);
    for (std::size_t i = row + 1; i < n; ++i) {
      const Scalar f = a(i, col);
      for (std::size_t j = col; j < n; ++j) {
        a(i, j) = (a(i, j) * p - f * a(row, j)) / prev;
      }
    }
    prev = p;
    ++row;
  }
  last_pivot = prev;
  return row;
}

}  // namespace

std::size_t rank(const Mat& m) {
  Mat a = m;
  int s = 1;
  Scalar last;
  return bareiss(a, s, last);
}

Scalar determinant(const Mat& m) {
  Mat a = m;
  int s = 1;
  Scalar last;
  const std::size_t r = bareiss(a, s, last);
  if (r < m.size()) return Scalar(0);
  if (m.size() == 0) return Scalar(1);
  // With full rank and no column skips the final pivot is the determinant.
  return s < 0 ? -a(m.size() - 1, m.size() - 1) : a(m.size() - 1, m.size() - 1);
}

std::vector<std::vector<Scalar>> kernel_basis(const Mat& m) {
  const std::size_t n = m.size();
  Mat a = m;
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
    const Scalar inv = a(row, col).inverse();
    for (std::size_t j = 0; j < n; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(n, Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat evaluate_at(const Poly1& p, const Mat& m) {
  Mat acc(m.size());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.size(); ++i) acc(i, i) += *it;
  }
  return acc;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.size(); ++c) os << (c ? ", " : "") << m(r, c);
  }
  os << "]";
  return os.str();
}

}  // namespace curv22
