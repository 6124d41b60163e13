#ifndef CURV22_POLY1_HPP
#define CURV22_POLY1_HPP

#include <string>
#include <utility>
#include <vector>

#include "curv22/scalar.hpp"

namespace curv22 {

/// Univariate polynomial over Q(sqrt 2), coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Scalar> coeffs);
  Poly1(const Scalar& c);  // NOLINT(google-explicit-constructor)

  /// The monomial c*x^k.
  static Poly1 monomial(const Scalar& c, int k);
  /// x - r
  static Poly1 linear_root(const Scalar& r);
  /// prod (x - r_i)
  static Poly1 from_roots(const std::vector<Scalar>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  Scalar coeff(int k) const;
  const Scalar& leading() const { return coeffs_.back(); }

  Scalar eval(const Scalar& x) const;
  Poly1 derivative() const;
  Poly1 monic() const;
  Poly1 conj() const;

  Poly1 operator-() const;
  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Poly1& o);
  Poly1& operator*=(const Scalar& c);

  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(Poly1 a, const Poly1& b) { return a *= b; }
  friend Poly1 operator*(Poly1 a, const Scalar& c) { return a *= c; }
  friend Poly1 operator*(const Scalar& c, Poly1 a) { return a *= c; }
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const char* var = "x") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);
Poly1 operator/(const Poly1& a, const Poly1& b);
Poly1 operator%(const Poly1& a, const Poly1& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly1 gcd(const Poly1& a, const Poly1& b);

/// Square-free factorization p = lead * prod_i factors[i]^(i+1) (Yun).
/// Entries are monic; an entry equal to 1 means no roots of that multiplicity.
struct SquarefreeData {
  Poly1 squarefree_part;           // p / gcd(p, p'), monic
  std::vector<Poly1> by_multiplicity;  // by_multiplicity[m-1]: roots of multiplicity m
  /// Multiplicities of the distinct roots (over C), descending.
  std::vector<int> multiplicity_profile;
};

SquarefreeData squarefree_data(const Poly1& p);

}  // namespace curv22

#endif  // CURV22_POLY1_HPP
