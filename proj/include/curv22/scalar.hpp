#ifndef CURV22_SCALAR_HPP
#define CURV22_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace curv22 {

using Rational = mpq_class;

/// Exact element rat + surd*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// Both parts are GMP rationals kept in canonical form (lowest terms,
/// positive denominator). Every operation, including sign and ordering,
/// is exact.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational rat) : rat_(std::move(rat)) { rat_.canonicalize(); }  // NOLINT
  Scalar(Rational rat, Rational surd);

  static Scalar frac(long num, long den);
  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }

  /// Parses "p", "p/q", "p/q*sqrt2", "p/q+r/s*sqrt2", "p/q-r/s*sqrt2".
  /// Decimal notation is rejected.
  static Scalar parse(std::string_view text);

  const Rational& rat() const { return rat_; }
  const Rational& surd() const { return surd_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(surd_) == 0; }
  bool is_rational() const { return sgn(surd_) == 0; }

  /// -1, 0 or +1.
  int sign() const;

  /// Galois conjugate rat - surd*sqrt(2).
  Scalar conj() const { return Scalar(rat_, -surd_); }

  /// Field norm rat^2 - 2 surd^2.
  Rational norm() const { return rat_ * rat_ - 2 * surd_ * surd_; }

  Scalar inverse() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  /// Rational r with r >= |this|.
  Rational abs_upper_bound() const;

  double to_double() const;

  /// Canonical serialization: "p/q", "p/q*sqrt2" or "p/q+r/s*sqrt2".
  std::string to_string() const;

  Scalar operator-() const { return Scalar(-rat_, -surd_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.surd_ == b.surd_;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  Rational rat_{0};
  Rational surd_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Canonical "p/q" text of a rational.
std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace curv22

#endif  // CURV22_SCALAR_HPP
