#ifndef CURV22_POLY4_HPP
#define CURV22_POLY4_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "curv22/scalar.hpp"

namespace curv22 {

/// Exponent vector over the variables v1..v4.
using Monomial = std::array<std::uint8_t, 4>;

/// Sparse polynomial in v1..v4 over Q(sqrt 2). Zero coefficients are never
/// stored.
class Poly4 {
 public:
  Poly4() = default;
  Poly4(const Scalar& c);  // NOLINT(google-explicit-constructor)

  /// The variable v_{index+1}, index in 0..3.
  static Poly4 var(int index);
  static Poly4 term(const Scalar& c, const Monomial& m);
  /// The neutral quadric q(v) = -v1^2 - v2^2 + v3^2 + v4^2.
  static Poly4 neutral_quadric();

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  Scalar coeff(const Monomial& m) const;

  /// Total degree; -1 for zero.
  int degree() const;
  /// True iff all terms share one total degree (zero counts as homogeneous).
  bool is_homogeneous() const;
  int degree_in(int var) const;

  Scalar eval(const std::array<Scalar, 4>& v) const;

  Poly4 operator-() const;
  Poly4& operator+=(const Poly4& o);
  Poly4& operator-=(const Poly4& o);
  Poly4& operator*=(const Poly4& o);
  Poly4& operator*=(const Scalar& c);
  Poly4& operator/=(const Scalar& c);

  friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }
  friend Poly4 operator-(Poly4 a, const Poly4& b) { return a -= b; }
  friend Poly4 operator*(const Poly4& a, const Poly4& b);
  friend Poly4 operator*(Poly4 a, const Scalar& c) { return a *= c; }
  friend Poly4 operator*(const Scalar& c, Poly4 a) { return a *= c; }
  friend Poly4 operator/(Poly4 a, const Scalar& c) { return a /= c; }
  friend bool operator==(const Poly4& a, const Poly4& b) { return a.terms_ == b.terms_; }

  Poly4 pow(unsigned k) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  std::map<Monomial, Scalar> terms_;
};

/// Canonical remainder of p modulo the neutral quadric q. The reduction
/// rewrites v4^2 -> v1^2 + v2^2 - v3^2, so the remainder has degree at most 1
/// in v4 and is zero exactly when q divides p. Throws InvalidArgument when q
/// is not the neutral quadric.
Poly4 reduce_mod_quadric(const Poly4& p, const Poly4& q);

/// Canonical remainder of p (a polynomial in c = v1, s = v2) modulo
/// c^2 + s^2 - 1, via s^2 -> 1 - c^2. Other variables must not occur.
Poly4 reduce_mod_circle(const Poly4& p);

}  // namespace curv22

#endif  // CURV22_POLY4_HPP
