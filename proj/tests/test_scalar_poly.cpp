#include <algorithm>

#include <gmpxx.h>

#include "curv22/errors.hpp"
#include "curv22/matrix.hpp"
#include "curv22/poly1.hpp"
#include "curv22/poly4.hpp"
#include "curv22/random.hpp"
#include "curv22/roots.hpp"
#include "curv22/scalar.hpp"
#include "doctest.h"

using namespace curv22;

namespace {

// Independent sign oracle: 256-bit floating evaluation of a + b*sqrt(2).
int float_sign(const Scalar& s) {
  mpf_class two(2, 256);
  mpf_class v = mpf_class(s.rat(), 256) + mpf_class(s.surd(), 256) * sqrt(two);
  return sgn(v);
}

Mat random_mat(RationalSampler& rs, std::size_t n) {
  Mat m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rs.surd_scalar();
  return m;
}

Poly1 x_minus(long r) { return Poly1::linear_root(Scalar(r)); }

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(Scalar::parse("3") == Scalar(3));
  CHECK(Scalar::parse("-6/4") == Scalar::frac(-3, 2));
  CHECK(Scalar::parse("-1/2*sqrt2") == Scalar(Rational(0), Rational(-1, 2)));
  CHECK(Scalar::parse("1/3+2/5*sqrt2") == Scalar(Rational(1, 3), Rational(2, 5)));
  CHECK(Scalar::parse("1/3-2/5*sqrt2") == Scalar(Rational(1, 3), Rational(-2, 5)));
  CHECK(Scalar::parse("sqrt2") == Scalar::sqrt2());
  CHECK(Scalar::parse("2-sqrt2") == Scalar(Rational(2), Rational(-1)));
  CHECK(Scalar(Rational(1, 3), Rational(-2, 5)).to_string() == "1/3-2/5*sqrt2");
  CHECK(Scalar(Rational(0), Rational(-1, 2)).to_string() == "-1/2*sqrt2");
  CHECK(Scalar(1).to_string() == "1");
  CHECK_THROWS_AS(Scalar::parse("0.5"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
}

TEST_CASE("scalar field axioms and exact sign on random elements") {
  RationalSampler rs(11);
  for (int t = 0; t < 300; ++t) {
    const Scalar a = rs.surd_scalar();
    const Scalar b = rs.surd_scalar();
    const Scalar c = rs.surd_scalar();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    CHECK(a.sign() * b.sign() == (a * b).sign());
    CHECK(a.sign() == float_sign(a));
    CHECK(Scalar::parse(a.to_string()) == a);
  }
  // a^2 close to 2 b^2 with opposite signs.
  CHECK(Scalar(Rational(99), Rational(-70)).sign() == 1);    // 9801 > 9800
  CHECK(Scalar(Rational(-99), Rational(70)).sign() == -1);
  CHECK(Scalar(Rational(140), Rational(-99)).sign() == -1);  // 19600 < 19602
}

TEST_CASE("rank") {
  CHECK(rank(Mat::identity(4)) == 4);
  CHECK(rank(Mat(4)) == 0);
  const Scalar b(5);
  // Jacobi operator at u = e2 - e3 of the Type II table, beta != 0.
  Mat j2(4, {0, 0, 0, 0, 0, b, b, 0, 0, -b, -b, 0, 0, 0, 0, 0});
  CHECK(rank(j2) == 1);
  // Jacobi operator at u = e2 - e3 of the Type III table.
  const Scalar r = Scalar::sqrt2();
  const Scalar a(3);
  Mat j3(4, {0, -r, -r, 0, -r, a, a, r, r, -a, -a, -r, 0, -r, -r, 0});
  CHECK(rank(j3) == 2);

  RationalSampler rs(5);
  for (int t = 0; t < 100; ++t) {
    Mat m = random_mat(rs, 4);
    // Force some rank deficiency half of the time.
    if (rs.coin()) {
      for (std::size_t c = 0; c < 4; ++c) m(3, c) = m(0, c) * Scalar(2) - m(1, c);
    }
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(rank(m * m) <= rank(m));
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  RationalSampler rs(17);
  for (int t = 0; t < 40; ++t) {
    Mat m = random_mat(rs, 3);
    const Scalar cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                       m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(determinant(m) == cof);
  }
}

TEST_CASE("char_poly") {
  CHECK(char_poly(Mat::identity(3)) == Poly1::from_roots({1, 1, 1}));
  const Scalar k1 = Scalar::frac(1, 2), k2(-3), k3 = Scalar(Rational(1), Rational(1));
  const Mat d = Mat::diagonal({Scalar(3) * k1, Scalar(-3) * k2, Scalar(-3) * k3});
  CHECK(char_poly(d) == Poly1::from_roots({Scalar(3) * k1, Scalar(-3) * k2, Scalar(-3) * k3}));
  // Strictly upper-triangular 4x4 is nilpotent.
  Mat n(4, {0, 1, 2, 3, 0, 0, 4, 5, 0, 0, 0, 6, 0, 0, 0, 0});
  CHECK(char_poly(n) == Poly1::monomial(Scalar(1), 4));

  RationalSampler rs(23);
  for (int t = 0; t < 30; ++t) {
    const Mat m = random_mat(rs, 4);
    Mat p = random_mat(rs, 4);
    if (determinant(p).is_zero()) continue;
    // Inverse through the kernel of [p | I] is overkill; use adjugate-free route:
    // solve p * x_j = e_j column by column with kernel_basis on augmented systems.
    Mat inv(4);
    for (std::size_t j = 0; j < 4; ++j) {
      Mat aug(5);
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) aug(r, c) = p(r, c);
        aug(r, 4) = r == j ? Scalar(-1) : Scalar(0);
      }
      auto ker = kernel_basis(aug);
      REQUIRE(ker.size() == 1);
      const Scalar scale = ker[0][4].inverse();
      for (std::size_t r = 0; r < 4; ++r) inv(r, j) = ker[0][r] * scale;
    }
    REQUIRE(p * inv == Mat::identity(4));
    CHECK(char_poly(p * m * inv) == char_poly(m));
    // Cayley-Hamilton.
    CHECK(evaluate_at(char_poly(m), m).is_zero());
  }
}

TEST_CASE("squarefree_data") {
  auto cube = squarefree_data(Poly1::from_roots({1, 1, 1}));
  CHECK(cube.squarefree_part == x_minus(1));
  CHECK(cube.multiplicity_profile == std::vector<int>{3});

  const Scalar alpha = Scalar(Rational(1, 2), Rational(1));
  const Scalar beta(-4);
  auto ii = squarefree_data(Poly1::from_roots({alpha, alpha, beta}));
  CHECK(ii.multiplicity_profile == std::vector<int>{2, 1});
  CHECK(ii.squarefree_part == Poly1::from_roots({alpha, beta}));

  const Poly1 x2p1({Scalar(1), Scalar(0), Scalar(1)});
  auto sq = squarefree_data(x2p1);
  CHECK(sq.squarefree_part == x2p1);
  CHECK(count_real_roots(x2p1) == 0);

  CHECK_THROWS_AS(squarefree_data(Poly1()), InvalidArgument);
}

TEST_CASE("isolate_real_roots examples") {
  SUBCASE("x^2 - 2 has exact roots +-sqrt2") {
    auto iso = isolate_real_roots(Poly1({Scalar(-2), Scalar(0), Scalar(1)}));
    REQUIRE(iso.size() == 2);
    REQUIRE(iso[0].exact);
    REQUIRE(iso[1].exact);
    CHECK(*iso[0].exact == -Scalar::sqrt2());
    CHECK(*iso[1].exact == Scalar::sqrt2());
  }
  SUBCASE("x^3 - 3x + 1 has three irrational roots in disjoint intervals") {
    const Poly1 p({Scalar(1), Scalar(-3), Scalar(0), Scalar(1)});
    auto iso = isolate_real_roots(p);
    REQUIRE(iso.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK_FALSE(iso[i].exact);
      // Oracle: sign change of p across each interval.
      CHECK(p.eval(Scalar(iso[i].lo)).sign() * p.eval(Scalar(iso[i].hi)).sign() < 0);
      if (i > 0) CHECK(iso[i - 1].hi <= iso[i].lo);
    }
    iso.refine(1, Rational(1, 1000000));
    CHECK(iso[1].hi - iso[1].lo < Rational(1, 1000000));
    CHECK(p.eval(Scalar(iso[1].lo)).sign() * p.eval(Scalar(iso[1].hi)).sign() < 0);
  }
  SUBCASE("(x-3)(x+1)(x+2) has exact roots") {
    const Poly1 p = x_minus(3) * x_minus(-1) * x_minus(-2);
    auto iso = isolate_real_roots(p);
    REQUIRE(iso.size() == 3);
    std::vector<Scalar> got;
    for (std::size_t i = 0; i < 3; ++i) {
      REQUIRE(iso[i].exact);
      got.push_back(*iso[i].exact);
      CHECK(p.eval(*iso[i].exact).is_zero());
    }
    CHECK(got == std::vector<Scalar>{-2, -1, 3});
  }
  SUBCASE("multiplicities and Q(sqrt2) roots of a mixed product") {
    const Scalar r1(Rational(1), Rational(1));         // 1 + sqrt2
    const Scalar r2(Rational(-2, 3), Rational(1, 5));  // -2/3 + sqrt2/5
    Poly1 p = Poly1::from_roots({r1, r1, r2, Scalar::frac(3, 2)});
    p *= Poly1({Scalar(1), Scalar(0), Scalar(1)});  // x^2 + 1
    p *= Poly1({Scalar(-3), Scalar(0), Scalar(1)});  // x^2 - 3, roots not in Q(sqrt2)
    auto iso = isolate_real_roots(p);
    REQUIRE(iso.size() == 5);
    int exact = 0;
    for (std::size_t i = 0; i < iso.size(); ++i) {
      if (iso[i].exact) {
        ++exact;
        CHECK(p.eval(*iso[i].exact).is_zero());
        CHECK(iso[i].multiplicity == (*iso[i].exact == r1 ? 2 : 1));
      }
    }
    CHECK(exact == 3);
  }
}

TEST_CASE("Sturm count matches isolated intervals on random products") {
  RationalSampler rs(31, 9);
  for (int t = 0; t < 40; ++t) {
    Poly1 p(Scalar(1));
    int expected = 0;
    std::vector<Scalar> distinct;
    const long nlin = rs.integer(0, 4);
    for (long k = 0; k < nlin; ++k) {
      const Scalar r = rs.surd_scalar();
      p *= Poly1::linear_root(r);
      if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
    }
    expected = static_cast<int>(distinct.size());
    if (rs.coin()) {
      const Scalar n = rs.nonzero();
      p *= Poly1({n * n, Scalar(0), Scalar(1)});  // no real roots
    }
    if (p.degree() == 0) continue;
    auto iso = isolate_real_roots(p);
    CHECK(static_cast<int>(iso.size()) == expected);
    CHECK(sturm_count_all(sturm_sequence(iso.squarefree_part())) == static_cast<int>(iso.size()));
    for (std::size_t i = 0; i < iso.size(); ++i) {
      REQUIRE(iso[i].exact);
      CHECK(std::find(distinct.begin(), distinct.end(), *iso[i].exact) != distinct.end());
    }
  }
}

TEST_CASE("sign of a polynomial at an isolated root") {
  // Roots of x^3 - 3x + 1: approx -1.879, 0.347, 1.532.
  auto iso = isolate_real_roots(Poly1({Scalar(1), Scalar(-3), Scalar(0), Scalar(1)}));
  const Poly1 x = Poly1::monomial(Scalar(1), 1);
  CHECK(iso.sign_at(0, x) == -1);
  CHECK(iso.sign_at(1, x) == 1);
  CHECK(iso.sign_at(1, x - Poly1(Scalar::frac(1, 3))) == 1);
  CHECK(iso.sign_at(1, x - Poly1(Scalar::frac(7, 20))) == -1);
  // q shares the root: sign 0.
  CHECK(iso.sign_at(2, Poly1({Scalar(1), Scalar(-3), Scalar(0), Scalar(1)}) * x) == 0);
}

TEST_CASE("reduce_mod_quadric") {
  const Poly4 q = Poly4::neutral_quadric();
  const Poly4 v1 = Poly4::var(0), v2 = Poly4::var(1), v3 = Poly4::var(2), v4 = Poly4::var(3);
  CHECK(reduce_mod_quadric(q, q).is_zero());
  CHECK(reduce_mod_quadric(v3 * v3 + v4 * v4, q) == v1 * v1 + v2 * v2);
  CHECK(reduce_mod_quadric(v1 * q + v2, q) == v2);
  CHECK_THROWS_AS(reduce_mod_quadric(q, v1 * v1), InvalidArgument);

  RationalSampler rs(41, 7);
  auto random_poly = [&](int deg) {
    Poly4 p;
    for (int k = 0; k < 6; ++k) {
      Monomial m{0, 0, 0, 0};
      for (int d = 0; d < deg; ++d) m[static_cast<std::size_t>(rs.integer(0, 3))]++;
      p += Poly4::term(rs.surd_scalar(), m);
    }
    return p;
  };
  // Rational null vectors from the half-angle parametrization.
  std::vector<std::array<Scalar, 4>> nulls;
  for (int k = 0; k < 100; ++k) {
    const Scalar t = rs.scalar(), u = rs.scalar();
    const Scalar dt = Scalar(1) + t * t, du = Scalar(1) + u * u;
    nulls.push_back({(Scalar(1) - t * t) / dt, Scalar(2) * t / dt, (Scalar(1) - u * u) / du, Scalar(2) * u / du});
  }
  for (int t = 0; t < 30; ++t) {
    const bool divisible = rs.coin();
    Poly4 p = divisible ? q * random_poly(2) : random_poly(4);
    const bool rem_zero = reduce_mod_quadric(p, q).is_zero();
    bool vanishes = true;
    for (const auto& v : nulls) vanishes = vanishes && p.eval(v).is_zero();
    CHECK(rem_zero == vanishes);
    if (divisible) CHECK(rem_zero);
    // Remainder differs from p by a multiple of q: same values on the cone.
    const Poly4 r = reduce_mod_quadric(p, q);
    CHECK(r.degree_in(3) <= 1);
    for (std::size_t k = 0; k < 10; ++k) CHECK(r.eval(nulls[k]) == p.eval(nulls[k]));
  }
}

TEST_CASE("reduce_mod_circle") {
  const Poly4 c = Poly4::var(0), s = Poly4::var(1);
  CHECK(reduce_mod_circle(c * c + s * s) == Poly4(Scalar(1)));
  CHECK(reduce_mod_circle(s * s * s) == s - c * c * s);
  CHECK_THROWS_AS(reduce_mod_circle(Poly4::var(2)), InvalidArgument);
}

TEST_CASE("Poly4 homogeneity") {
  const Poly4 q = Poly4::neutral_quadric();
  CHECK(q.is_homogeneous());
  CHECK(q.degree() == 2);
  CHECK_FALSE((q + Poly4::var(0)).is_homogeneous());
}
