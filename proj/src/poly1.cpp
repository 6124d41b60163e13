#include "curv22/poly1.hpp"

#include <algorithm>
#include <sstream>

#include "curv22/errors.hpp"

namespace curv22 {

Poly1::Poly1(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly1::Poly1(const Scalar& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Poly1 Poly1::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly1(std::move(v));
}

Poly1 Poly1::linear_root(const Scalar& r) { return Poly1({-r, Scalar(1)}); }

Poly1 Poly1::from_roots(const std::vector<Scalar>& roots) {
  Poly1 p(Scalar(1));
  for (const auto& r : roots) p *= linear_root(r);
  return p;
}

void Poly1::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly1::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Scalar Poly1::eval(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly1 Poly1::derivative() const {
  if (coeffs_.size() <= 1) return Poly1();
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
  return Poly1(std::move(d));
}

Poly1 Poly1::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = leading().inverse();
  return *this * inv;
}

Poly1 Poly1::conj() const {
  std::vector<Scalar> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.conj());
  return Poly1(std::move(v));
}

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Poly1& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string Poly1::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (k >= 1) os << "*" << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw InvalidArgument("Poly1 division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly1(), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Scalar inv_lead = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= b.degree(); --k) {
    const Scalar c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c.is_zero()) continue;
    const int shift = k - b.degree();
    quot[static_cast<std::size_t>(shift)] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(shift) + j] -= c * bc[j];
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {Poly1(std::move(quot)), Poly1(std::move(rem))};
}

Poly1 operator/(const Poly1& a, const Poly1& b) { return divmod(a, b).first; }
Poly1 operator%(const Poly1& a, const Poly1& b) { return divmod(a, b).second; }

Poly1 gcd(const Poly1& a, const Poly1& b) {
  Poly1 x = a;
  Poly1 y = b;
  while (!y.is_zero()) {
    Poly1 r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

SquarefreeData squarefree_data(const Poly1& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree_data: zero polynomial");
  SquarefreeData out;
  const Poly1 f = p.monic();
  const Poly1 fp = f.derivative();
  Poly1 g = gcd(f, fp);
  out.squarefree_part = f / g;
  // Yun's algorithm.
  Poly1 b = out.squarefree_part;
  Poly1 c = fp / g;
  Poly1 d = c - b.derivative();
  while (b.degree() > 0) {
    Poly1 a = gcd(b, d);
    out.by_multiplicity.push_back(a);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  for (std::size_t m = out.by_multiplicity.size(); m-- > 0;) {
    const int count = out.by_multiplicity[m].degree();
    for (int k = 0; k < count; ++k) out.multiplicity_profile.push_back(static_cast<int>(m) + 1);
  }
  return out;
}

}  // namespace curv22
