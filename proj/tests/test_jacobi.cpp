#include <cmath>

#include "curv22/errors.hpp"
#include "curv22/families.hpp"
#include "curv22/jacobi.hpp"
#include "curv22/random.hpp"
#include "doctest.h"

using namespace curv22;

namespace {

const Vec4 e1 = basis_vector(0), e2 = basis_vector(1), e3 = basis_vector(2), e4 = basis_vector(3);

bool self_adjoint(const Mat& j) {
  for (std::size_t y = 0; y < 4; ++y)
    for (std::size_t z = 0; z < 4; ++z)
      if (inner(act(j, basis_vector(y)), basis_vector(z)) != inner(basis_vector(y), act(j, basis_vector(z))))
        return false;
  return true;
}

// Double-precision eigenvector of a 3x3 matrix for an approximate eigenvalue,
// via the largest cross product of rows of (m - l I).
std::array<double, 3> approx_eigenvector(const Mat& m, double l) {
  double a[3][3];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a[i][j] = m(i, j).to_double() - (i == j ? l : 0.0);
  std::array<double, 3> best{};
  double best_norm = -1;
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) {
      std::array<double, 3> c = {a[p][1] * a[q][2] - a[p][2] * a[q][1], a[p][2] * a[q][0] - a[p][0] * a[q][2],
                                 a[p][0] * a[q][1] - a[p][1] * a[q][0]};
      const double n = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
      if (n > best_norm) {
        best_norm = n;
        best = c;
      }
    }
  return best;
}

}  // namespace

TEST_CASE("Jacobi operator of A^0") {
  const CurvatureTensor a0 = build_A0();
  CHECK(jacobi(a0, e3).matrix == Mat::diagonal({1, 1, 0, 1}));
  RationalSampler rs(1);
  for (int t = 0; t < 30; ++t) {
    const Vec4 x = random_vector(rs), y = random_vector(rs);
    CHECK(act(jacobi(a0, x).matrix, y) == norm2(x) * y - inner(x, y) * x);
  }
  CHECK(jacobi(random_curvature_tensor(rs), Vec4{}).matrix.is_zero());
}

TEST_CASE("Jacobi invariants on random tensors") {
  RationalSampler rs(2);
  for (int t = 0; t < 50; ++t) {
    const CurvatureTensor a = random_curvature_tensor(rs, 3);
    const Vec4 x = random_vector(rs);
    const Mat j = jacobi(a, x).matrix;
    CHECK(self_adjoint(j));
    CHECK(is_zero(act(j, x)));
    const Scalar l = rs.scalar();
    CHECK(jacobi(a, l * x).matrix == (l * l) * j);
    // <J(x)y, z> = A(y, x, x, z) on random vectors.
    const Vec4 y = random_vector(rs), z = random_vector(rs);
    CHECK(inner(act(j, y), z) == a(y, x, x, z));
  }
}

TEST_CASE("restrict reproduces the ansatz model matrix") {
  RationalSampler rs(3);
  for (int t = 0; t < 20; ++t) {
    const family::Ansatz f = random_ansatz(rs);
    const CurvatureTensor a = build_family(f);
    const RestrictedOperator r = restrict_jacobi(a, e3);
    CHECK(r.frame_signs == std::array<int, 3>{1, -1, -1});
    CHECK(r.matrix == ansatz_matrix(f));
    const RestrictedOperator rt = restrict_jacobi(a, e1);
    CHECK(rt.frame_signs == std::array<int, 3>{-1, 1, 1});
    CHECK(char_poly(rt.matrix) == char_poly(-ansatz_matrix(f)));
  }
  const Scalar k0 = Scalar::frac(5, 3);
  CHECK(restrict_jacobi(build_family(family::Constant{k0}), e3).matrix == k0 * Mat::identity(3));
  CHECK_THROWS_AS(restrict_jacobi(build_A0(), Scalar(2) * e3), NonUnitVector);
  CHECK_THROWS_AS(restrict_jacobi(build_A0(), e1 + e3), NonUnitVector);
}

TEST_CASE("char_poly of the restriction is constant on unit spacelike vectors") {
  RationalSampler rs(4);
  for (int t = 0; t < 4; ++t) {
    const CurvatureTensor a = build_family(random_ansatz(rs));
    const Poly1 ref = char_poly(restrict_jacobi(a, e3).matrix);
    for (int n = 0; n < 25; ++n) CHECK(char_poly(restrict_jacobi(a, random_unit_vector(rs, true)).matrix) == ref);
  }
}

TEST_CASE("Jordan types of the model families") {
  const Scalar k0 = Scalar::frac(1, 2), kj(2);
  SUBCASE("complex form is Ia with roots k0+3kJ, k0, k0") {
    const JordanReport rep = jordan_classify(restrict_jacobi(build_family(family::ComplexForm{k0, kj}), e3));
    CHECK(rep.type == JordanType::Ia);
    CHECK(rep.char_poly == Poly1::from_roots({k0 + Scalar(3) * kj, k0, k0}));
    REQUIRE(rep.roots.size() == 2);
    CHECK(*rep.roots[0].exact == k0);
    CHECK(rep.roots[0].multiplicity == 2);
    CHECK(rep.roots[0].causal == EigenspaceCausal::Timelike);
    CHECK(*rep.roots[1].exact == k0 + Scalar(3) * kj);
    CHECK(rep.roots[1].causal == EigenspaceCausal::Spacelike);
  }
  SUBCASE("type Ia table has alpha on a spacelike eigenvector") {
    const Scalar al(4), be(-1), ga = Scalar::frac(1, 3);
    const JordanReport rep = jordan_classify(restrict_jacobi(build_family(family::TypeIa{al, be, ga}), e3));
    CHECK(rep.type == JordanType::Ia);
    REQUIRE(rep.roots.size() == 3);
    for (const auto& r : rep.roots)
      CHECK(r.causal == (*r.exact == al ? EigenspaceCausal::Spacelike : EigenspaceCausal::Timelike));
  }
  SUBCASE("type Ib") {
    const Scalar a(1), b(-2), c(3);
    const JordanReport rep = jordan_classify(restrict_jacobi(build_family(family::TypeIb{a, b, c}), e3));
    CHECK(rep.type == JordanType::Ib);
    // (l - a)^2 + b^2 times (l + c)
    CHECK(rep.char_poly == Poly1({a * a + b * b, Scalar(-2) * a, Scalar(1)}) * Poly1::linear_root(-c));
    REQUIRE(rep.roots.size() == 1);
    CHECK(*rep.roots[0].exact == -c);
  }
  SUBCASE("type II, both signs") {
    for (int s : {1, -1}) {
      const Scalar al = Scalar::frac(3, 2), be(-1);
      const RestrictedOperator r = restrict_jacobi(build_family(family::TypeII{al, be, s}), e3);
      const JordanReport rep = jordan_classify(r);
      CHECK(rep.type == JordanType::II);
      const Scalar dbl = Scalar(s) * al;
      CHECK(rep.char_poly == Poly1::from_roots({dbl, dbl, be}));
      const Mat n = r.matrix - dbl * Mat::identity(3);
      const Mat b = r.matrix - be * Mat::identity(3);
      CHECK_FALSE((n * b).is_zero());
      CHECK((n * n * b).is_zero());
    }
  }
  SUBCASE("type II with coinciding roots keeps a 2x2 block") {
    const JordanReport rep = jordan_classify(restrict_jacobi(build_family(family::TypeII{Scalar(2), Scalar(2), 1}), e3));
    CHECK(rep.type == JordanType::II);
  }
  SUBCASE("type III: minimal polynomial (l - alpha)^3 by brute force") {
    const Scalar al(-2);
    const RestrictedOperator r = restrict_jacobi(build_family(family::TypeIII{al}), e3);
    const JordanReport rep = jordan_classify(r);
    CHECK(rep.type == JordanType::III);
    const Mat n = r.matrix - al * Mat::identity(3);
    CHECK_FALSE((n * n).is_zero());
    CHECK((n * n * n).is_zero());
    CHECK(rep.min_poly == Poly1::from_roots({al, al, al}));
  }
}

TEST_CASE("eigenspace causal characters of irrational spectra") {
  RationalSampler rs(5);
  int irrational = 0;
  for (int t = 0; t < 60; ++t) {
    const family::Ansatz f = random_ansatz(rs);
    const RestrictedOperator r = restrict_jacobi(build_family(f), e3);
    const JordanReport rep = jordan_classify(r);
    if (rep.type != JordanType::Ia || rep.roots.size() != 3) continue;
    int spacelike = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& root = rep.roots[i];
      if (!root.exact) ++irrational;
      spacelike += root.causal == EigenspaceCausal::Spacelike;
      REQUIRE(root.causal != EigenspaceCausal::Unknown);
      // Floating oracle where it is well conditioned.
      const auto w = approx_eigenvector(r.matrix, rep.isolation.approx(i));
      const double n = w[0] * w[0] - w[1] * w[1] - w[2] * w[2];
      const double scale = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
      if (std::abs(n) > 1e-6 * scale) CHECK((n > 0) == (root.causal == EigenspaceCausal::Spacelike));
    }
    // Three orthogonal eigenlines in a (+,-,-) space: exactly one is spacelike.
    CHECK(spacelike == 1);
  }
  CHECK(irrational > 0);
}

TEST_CASE("type II and III witness matrices") {
  const Vec4 u = e2 - e3, v = e2 + e3;
  const Scalar al = Scalar::frac(7, 3), be(5);
  for (int s : {1, -1}) {
    const CurvatureTensor a = build_family(family::TypeII{al, be, s});
    CHECK(jacobi(a, u).matrix == Mat(4, {0, 0, 0, 0, 0, be, be, 0, 0, -be, -be, 0, 0, 0, 0, 0}));
    const Scalar t(2 * s);
    CHECK(jacobi(a, v).matrix == Mat(4, {t, 0, 0, -t, 0, be, -be, 0, 0, be, -be, 0, t, 0, 0, -t}));
  }
  const CurvatureTensor b = build_family(family::TypeIII{al});
  const Scalar r = Scalar::sqrt2();
  CHECK(jacobi(b, u).matrix == Mat(4, {0, -r, -r, 0, -r, al, al, r, r, -al, -al, -r, 0, -r, -r, 0}));
  CHECK(jacobi(b, v).matrix == Mat(4, {0, 0, 0, 0, 0, al, -al, 0, 0, al, -al, 0, 0, 0, 0, 0}));
}

TEST_CASE("null rank profiles") {
  const Scalar k0(2), k(-3);
  const CurvatureTensor cf = build_family(family::ComplexForm{k0, k});
  RationalSampler rs(6);
  for (int t = 0; t < 20; ++t) CHECK(null_rank_profile(cf, random_null_vector(rs)) == RankProfile{2, 0});

  const CurvatureTensor pc = build_family(family::Paracomplex{k0, k});
  const Vec4 w = e1 + standard_paraquaternionic()[1](e1);
  CHECK(null_rank_profile(pc, w).r1 <= 1);
  CHECK(null_rank_profile(pc, e1 + e4).r1 == 2);

  const CurvatureTensor ii = build_family(family::TypeII{Scalar(1), Scalar(0), 1});
  CHECK(null_rank_profile(ii, e2 - e3) == RankProfile{0, 0});
  CHECK(null_rank_profile(ii, e2 + e3) == RankProfile{1, 0});
  const CurvatureTensor ii2 = build_family(family::TypeII{Scalar(1), Scalar(4), -1});
  CHECK(null_rank_profile(ii2, e2 - e3).r1 == 1);
  CHECK(null_rank_profile(ii2, e2 + e3).r1 == 2);
  const CurvatureTensor iii = build_family(family::TypeIII{Scalar(1)});
  CHECK(null_rank_profile(iii, e2 - e3).r1 == 2);
  CHECK(null_rank_profile(iii, e2 + e3).r1 <= 1);

  CHECK_THROWS_AS(null_rank_profile(cf, Vec4{}), ZeroVector);
  CHECK_THROWS_AS(null_rank_profile(cf, e1), NotNull);
}

TEST_CASE("nilpotency on the null cone for Osserman families") {
  RationalSampler rs(7);
  for (int t = 0; t < 5; ++t) {
    const CurvatureTensor a = build_family(random_ansatz(rs));
    for (int n = 0; n < 20; ++n)
      CHECK(char_poly(jacobi(a, random_null_vector(rs)).matrix) == Poly1::monomial(Scalar(1), 4));
  }
}
