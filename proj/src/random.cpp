#include "curv22/random.hpp"

#include "curv22/duality.hpp"

namespace curv22 {

std::pair<Scalar, Scalar> random_circle_point(RationalSampler& rs) {
  const Scalar t = rs.scalar();
  const Scalar d = Scalar(1) + t * t;
  return {(Scalar(1) - t * t) / d, Scalar(2) * t / d};
}

std::pair<Scalar, Scalar> random_hyperbolic_pair(RationalSampler& rs) {
  Scalar t;
  do t = rs.scalar(); while (t.abs() >= Scalar::frac(7, 8));
  const Scalar d = Scalar(1) - t * t;
  return {(Scalar(1) + t * t) / d, Scalar(2) * t / d};
}

namespace {

Mat plane_transform(std::size_t i, std::size_t j, const Scalar& c, const Scalar& s, bool boost) {
  Mat m = Mat::identity(4);
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = boost ? s : -s;
  m(j, i) = s;
  return m;
}

}  // namespace

Mat random_isometry(RationalSampler& rs, int factors) {
  Mat m = Mat::identity(4);
  for (int f = 0; f < factors; ++f) {
    const long kind = rs.integer(0, 5);
    if (kind == 0) {
      auto [c, s] = random_circle_point(rs);
      m = plane_transform(0, 1, c, s, false) * m;
    } else if (kind == 1) {
      auto [c, s] = random_circle_point(rs);
      m = plane_transform(2, 3, c, s, false) * m;
    } else {
      auto [c, s] = random_hyperbolic_pair(rs);
      const std::size_t i = static_cast<std::size_t>(rs.integer(0, 1));
      const std::size_t j = static_cast<std::size_t>(rs.integer(2, 3));
      m = plane_transform(i, j, c, s, true) * m;
    }
  }
  return m;
}

Vec4 random_unit_vector(RationalSampler& rs, bool spacelike) {
  return act(random_isometry(rs), basis_vector(spacelike ? 2 : 0));
}

Vec4 random_null_vector(RationalSampler& rs) {
  const Scalar scale = rs.nonzero();
  auto [c1, s1] = random_circle_point(rs);
  auto [c2, s2] = random_circle_point(rs);
  return scale * Vec4{c1, s1, c2, s2};
}

Vec4 random_vector(RationalSampler& rs) { return {rs.scalar(), rs.scalar(), rs.scalar(), rs.scalar()}; }

SkewAdjoint random_skew(RationalSampler& rs) {
  // g * Psi = K antisymmetric, g^{-1} = g.
  Mat m(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Scalar k = rs.scalar();
      m(i, j) = Scalar(metric_sign(i)) * k;
      m(j, i) = Scalar(metric_sign(j)) * -k;
    }
  return SkewAdjoint(std::move(m));
}

CurvatureTensor random_curvature_tensor(RationalSampler& rs, int terms) {
  CurvatureTensor a = rs.scalar() * build_A0();
  for (int t = 0; t < terms; ++t) a += rs.scalar() * build_A_Psi(random_skew(rs));
  return a;
}

family::Ansatz random_ansatz(RationalSampler& rs) {
  return {rs.scalar(), rs.scalar(), rs.scalar(), rs.scalar(), rs.scalar(), rs.scalar(), rs.scalar()};
}

std::array<Vec4, 4> random_frame(RationalSampler& rs, int factors) {
  const Mat m = random_isometry(rs, factors);
  std::array<Vec4, 4> f;
  for (std::size_t i = 0; i < 4; ++i) f[i] = act(m, basis_vector(i));
  return f;
}

CurvatureTensor random_einstein(RationalSampler& rs) {
  return weyl(random_curvature_tensor(rs, 3)) + rs.scalar() * build_A0();
}

CurvatureTensor random_self_dual_einstein(RationalSampler& rs) {
  const CurvatureTensor a = build_family(random_ansatz(rs));
  return a.in_frame(random_frame(rs, 2));
}

CurvatureTensor random_anti_self_dual_einstein(RationalSampler& rs) {
  return build_family(random_ansatz(rs)).in_frame({basis_vector(0), basis_vector(1), basis_vector(3), basis_vector(2)});
}

CurvatureTensor perturb_non_einstein(RationalSampler& rs, const CurvatureTensor& a) {
  const std::size_t i = static_cast<std::size_t>(rs.integer(0, 3));
  std::size_t j = static_cast<std::size_t>(rs.integer(0, 2));
  if (j >= i) ++j;
  const Scalar v = rs.nonzero();
  CurvatureTensor::Components raw = a.components();
  raw[CurvatureTensor::index(i, j, j, i)] += v;
  raw[CurvatureTensor::index(j, i, i, j)] += v;
  raw[CurvatureTensor::index(i, j, i, j)] -= v;
  raw[CurvatureTensor::index(j, i, j, i)] -= v;
  return CurvatureTensor::from_components(raw);
}

}  // namespace curv22
