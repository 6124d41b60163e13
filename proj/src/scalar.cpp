#include "curv22/scalar.hpp"

#include <cctype>
#include <ostream>

#include "curv22/errors.hpp"

namespace curv22 {

Scalar::Scalar(Rational rat, Rational surd) : rat_(std::move(rat)), surd_(std::move(surd)) {
  rat_.canonicalize();
  surd_.canonicalize();
}

Scalar Scalar::frac(long num, long den) {
  if (den == 0) throw InvalidArgument("Scalar::frac: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

int Scalar::sign() const {
  const int a = sgn(rat_);
  const int b = sgn(surd_);
  if (b == 0) return a;
  if (a == 0) return b;
  if (a == b) return a;
  // Opposite signs: the part with the larger square wins.
  const Rational lhs = rat_ * rat_;
  const Rational rhs = 2 * surd_ * surd_;
  return lhs > rhs ? a : b;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("Scalar::inverse: division by zero");
  const Rational n = norm();
  return Scalar(rat_ / n, -surd_ / n);
}

Rational Scalar::abs_upper_bound() const {
  // sqrt(2) < 3/2
  return Rational(::abs(rat_)) + Rational(::abs(surd_)) * Rational(3, 2);
}

double Scalar::to_double() const { return rat_.get_d() + surd_.get_d() * 1.4142135623730951; }

Scalar& Scalar::operator+=(const Scalar& o) {
  rat_ += o.rat_;
  surd_ += o.surd_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  rat_ -= o.rat_;
  surd_ -= o.surd_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    rat_ *= o.rat_;
    return *this;
  }
  Rational r = rat_ * o.rat_ + 2 * surd_ * o.surd_;
  Rational s = rat_ * o.surd_ + surd_ * o.rat_;
  rat_ = std::move(r);
  surd_ = std::move(s);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_rational()) {
    if (sgn(o.rat_) == 0) throw InvalidArgument("Scalar: division by zero");
    rat_ /= o.rat_;
    surd_ /= o.rat_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  std::string s(text);
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    const char c = s[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else {
      throw ParseError("malformed rational '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw ParseError("malformed rational '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty scalar");
  static constexpr std::string_view kSurd = "sqrt2";
  const auto pos = s.find("sqrt2");
  if (pos == std::string::npos) return Scalar(parse_rational(s));
  if (pos + kSurd.size() != s.size()) throw ParseError("malformed scalar '" + s + "'");
  std::string head = s.substr(0, pos);  // "[rat(+|-)][coef*]"
  Rational coef(1);
  if (!head.empty() && head.back() == '*') {
    head.pop_back();
    // Split off the surd coefficient: last '+' or '-' that is not the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = head.size(); k-- > 1;) {
      if (head[k] == '+' || head[k] == '-') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) return Scalar(Rational(0), parse_rational(head));
    Rational rat = parse_rational(head.substr(0, split));
    Rational surd = parse_rational(head.substr(split));
    return Scalar(std::move(rat), std::move(surd));
  }
  // Bare "sqrt2", "-sqrt2", "p/q+sqrt2", "p/q-sqrt2".
  if (head.empty() || head == "+") return Scalar(Rational(0), coef);
  if (head == "-") return Scalar(Rational(0), Rational(-1));
  const char last = head.back();
  if (last != '+' && last != '-') throw ParseError("malformed scalar '" + s + "'");
  head.pop_back();
  return Scalar(parse_rational(head), Rational(last == '-' ? -1 : 1));
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational_to_string(rat_);
  if (sgn(rat_) == 0) return rational_to_string(surd_) + "*sqrt2";
  std::string out = rational_to_string(rat_);
  if (sgn(surd_) > 0) out += "+";
  out += rational_to_string(surd_) + "*sqrt2";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace curv22
