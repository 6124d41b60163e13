#include "curv22/poly4.hpp"

#include <sstream>

#include "curv22/errors.hpp"

namespace curv22 {

Poly4::Poly4(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0, 0, 0}, c);
}

Poly4 Poly4::var(int index) {
  Monomial m{0, 0, 0, 0};
  m.at(static_cast<std::size_t>(index)) = 1;
  return term(Scalar(1), m);
}

Poly4 Poly4::term(const Scalar& c, const Monomial& m) {
  Poly4 p;
  p.add_term(m, c);
  return p;
}

Poly4 Poly4::neutral_quadric() {
  Poly4 q;
  q.add_term({2, 0, 0, 0}, Scalar(-1));
  q.add_term({0, 2, 0, 0}, Scalar(-1));
  q.add_term({0, 0, 2, 0}, Scalar(1));
  q.add_term({0, 0, 0, 2}, Scalar(1));
  return q;
}

void Poly4::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Poly4::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

static int total_degree(const Monomial& m) { return m[0] + m[1] + m[2] + m[3]; }

int Poly4::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

bool Poly4::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    const int td = total_degree(m);
    if (d >= 0 && td != d) return false;
    d = td;
  }
  return true;
}

int Poly4::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.at(static_cast<std::size_t>(var))));
  return d;
}

Scalar Poly4::eval(const std::array<Scalar, 4>& v) const {
  Scalar acc(0);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < 4; ++i) {
      for (int k = 0; k < m[i]; ++k) t *= v[i];
    }
    acc += t;
  }
  return acc;
}

Poly4 Poly4::operator-() const {
  Poly4 r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly4& Poly4::operator+=(const Poly4& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly4& Poly4::operator-=(const Poly4& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly4 operator*(const Poly4& a, const Poly4& b) {
  Poly4 r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{};
      for (std::size_t i = 0; i < 4; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly4& Poly4::operator*=(const Poly4& o) { return *this = *this * o; }

Poly4& Poly4::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Poly4& Poly4::operator/=(const Scalar& c) {
  const Scalar inv = c.inverse();
  for (auto& [m, x] : terms_) x *= inv;
  return *this;
}

Poly4 Poly4::pow(unsigned k) const {
  Poly4 r(Scalar(1));
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

std::string Poly4::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t i = 0; i < 4; ++i) {
      if (m[i] == 0) continue;
      os << "*v" << (i + 1);
      if (m[i] > 1) os << "^" << static_cast<int>(m[i]);
    }
  }
  return os.str();
}

namespace {

// Rewrites every occurrence of var^2 using `replacement` until the degree in
// var is at most one.
Poly4 eliminate_square(const Poly4& p, std::size_t var, const Poly4& replacement) {
  Poly4 out;
  // Powers of the replacement, built on demand.
  std::vector<Poly4> powers{Poly4(Scalar(1))};
  for (const auto& [m, c] : p.terms()) {
    const int k = m[var] / 2;
    Monomial rest = m;
    rest[var] = static_cast<std::uint8_t>(m[var] % 2);
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * replacement);
    out += Poly4::term(c, rest) * powers[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

Poly4 reduce_mod_quadric(const Poly4& p, const Poly4& q) {
  if (!(q == Poly4::neutral_quadric())) {
    throw InvalidArgument("reduce_mod_quadric: divisor must be -v1^2-v2^2+v3^2+v4^2");
  }
  // q = 0  <=>  v4^2 = v1^2 + v2^2 - v3^2
  const Poly4 repl = Poly4::term(Scalar(1), {2, 0, 0, 0}) + Poly4::term(Scalar(1), {0, 2, 0, 0}) -
                     Poly4::term(Scalar(1), {0, 0, 2, 0});
  return eliminate_square(p, 3, repl);
}

Poly4 reduce_mod_circle(const Poly4& p) {
  if (p.degree_in(2) > 0 || p.degree_in(3) > 0) {
    throw InvalidArgument("reduce_mod_circle: only v1 (cos) and v2 (sin) may occur");
  }
  const Poly4 repl = Poly4(Scalar(1)) - Poly4::term(Scalar(1), {2, 0, 0, 0});
  return eliminate_square(p, 1, repl);
}

}  // namespace curv22
