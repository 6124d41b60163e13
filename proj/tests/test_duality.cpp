#include "curv22/duality.hpp"
#include "curv22/errors.hpp"
#include "curv22/families.hpp"
#include "curv22/jacobi.hpp"
#include "curv22/random.hpp"
#include "doctest.h"

using namespace curv22;

namespace {

const Vec4 e1 = basis_vector(0), e2 = basis_vector(1), e3 = basis_vector(2), e4 = basis_vector(3);

Scalar g(std::size_t p, std::size_t q) { return p == q ? Scalar(metric_sign(p)) : Scalar(0); }

TwoForm unit_form(std::size_t p) {
  TwoForm w;
  w.c[p] = Scalar(1);
  return w;
}

}  // namespace

TEST_CASE("ricci") {
  const RicciData r0 = ricci(build_A0());
  CHECK(r0.ricci == Mat::diagonal({-3, -3, 3, 3}));
  CHECK(r0.tau == Scalar(12));
  REQUIRE(r0.einstein_constant);
  CHECK(*r0.einstein_constant == Scalar(3));

  const RicciData rz = ricci(CurvatureTensor());
  CHECK(rz.ricci.is_zero());
  CHECK(rz.tau.is_zero());
  REQUIRE(rz.einstein_constant);
  CHECK(rz.einstein_constant->is_zero());

  RationalSampler rs(1);
  for (int t = 0; t < 20; ++t) {
    const CurvatureTensor a = random_curvature_tensor(rs, 3);
    const Mat rho = ricci(a).ricci;
    CHECK(rho == rho.transpose());
    // rho(x, x) is the trace of the Jacobi operator.
    const Vec4 x = random_vector(rs);
    Scalar rxx;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rxx += rho(i, j) * x[i] * x[j];
    CHECK(rxx == jacobi(a, x).matrix.trace());
    CHECK(ricci(build_family(random_ansatz(rs))).einstein_constant.has_value());
  }
}

TEST_CASE("weyl") {
  CHECK(weyl(build_A0()).is_zero());
  RationalSampler rs(2);
  for (int t = 0; t < 20; ++t) {
    const CurvatureTensor a = random_curvature_tensor(rs, 3);
    const CurvatureTensor w = weyl(a);
    CHECK(ricci(w).ricci.is_zero());
    CHECK(weyl(w) == w);
    // Defining formula on random vectors.
    const RicciData r = ricci(a);
    const Vec4 x = random_vector(rs), y = random_vector(rs), z = random_vector(rs), v = random_vector(rs);
    auto rho = [&](const Vec4& p, const Vec4& q) {
      Scalar s;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) s += r.ricci(i, j) * p[i] * q[j];
      return s;
    };
    const Scalar expected = a(x, y, z, v) +
                            r.tau / Scalar(6) * (inner(y, z) * inner(x, v) - inner(x, z) * inner(y, v)) -
                            Scalar::frac(1, 2) * (rho(y, z) * inner(x, v) - rho(x, z) * inner(y, v) +
                                                  rho(x, v) * inner(y, z) - rho(y, v) * inner(x, z));
    CHECK(w(x, y, z, v) == expected);
    // Einstein reconstruction: A = W + (tau/12) A^0.
    const CurvatureTensor ein = random_einstein(rs);
    CHECK(ein == weyl(ein) + (ricci(ein).tau / Scalar(12)) * build_A0());
  }
}

TEST_CASE("hodge star") {
  const TwoForm e12 = unit_form(0), e14 = unit_form(2), e23 = unit_form(3), e34 = unit_form(5);
  CHECK(hodge_star(e12) == e34);
  CHECK(hodge_star(e14) == TwoForm{{0, 0, 0, -1, 0, 0}});
  CHECK(hodge_star(e23) == TwoForm{{0, 0, -1, 0, 0, 0}});
  for (std::size_t p = 0; p < 6; ++p) {
    CHECK(hodge_star(hodge_star(unit_form(p))) == unit_form(p));
    // phi ^ *theta = <phi, theta> vol
    for (std::size_t q = 0; q < 6; ++q) CHECK(wedge(unit_form(p), hodge_star(unit_form(q))) == inner(unit_form(p), unit_form(q)));
  }
  for (int eps : {1, -1}) {
    const auto b = lambda_basis(eps);
    for (std::size_t i = 0; i < 3; ++i) {
      TwoForm scaled = b[i];
      for (auto& c : scaled.c) c *= Scalar(eps);
      CHECK(hodge_star(b[i]) == scaled);
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(inner(b[i], b[j]) == (i != j ? Scalar(0) : i == 0 ? Scalar(2) : Scalar(-2)));
    }
  }
}

TEST_CASE("closed-form Weyl operator matches the direct assembly") {
  RationalSampler rs(3);
  for (int t = 0; t < 30; ++t) {
    const CurvatureTensor a = random_einstein(rs);
    for (int eps : {1, -1}) CHECK(weyl_operator(a, eps).matrix == weyl_operator_direct(a, eps));
  }
  CHECK(weyl_operator(build_A0(), 1).matrix.is_zero());
  CHECK(weyl_operator(build_A0(), -1).matrix.is_zero());
  const CurvatureTensor bad = build_A0() + build_family(family::TypeIa{1, 2, 3}).in_frame({e1, e3, e2, -e4});
  if (!is_einstein(bad)) CHECK_THROWS_AS(weyl_operator(bad, 1), NotEinstein);
}

TEST_CASE("weyl operator diagonal entries") {
  RationalSampler rs(4);
  const CurvatureTensor a = random_einstein(rs);
  for (int eps : {1, -1}) {
    const Scalar e(eps);
    const Mat m = weyl_operator(a, eps).matrix;
    CHECK(Scalar(3) * m(0, 0) == Scalar(2) * a.at("1212") + Scalar(3) * e * a.at("1234") + a.at("1313") + a.at("1414"));
    CHECK(Scalar(-3) * m(1, 1) == a.at("1212") + Scalar(2) * a.at("1313") + Scalar(3) * e * a.at("1324") - a.at("1414"));
  }
}

TEST_CASE("duality verdicts") {
  CHECK(duality_verdict(build_A0()) == Duality::Both);
  CHECK(duality_verdict(CurvatureTensor()) == Duality::Both);

  const CurvatureTensor cf = build_family(family::ComplexForm{0, Scalar(2)});
  const bool plus_zero = weyl_operator(cf, 1).matrix.is_zero();
  const bool minus_zero = weyl_operator(cf, -1).matrix.is_zero();
  CHECK(plus_zero != minus_zero);
  CHECK(minus_zero);  // W^- = 0: self-dual

  RationalSampler rs(5);
  for (int t = 0; t < 10; ++t) {
    const CurvatureTensor pq = build_family(family::Paraquaternionic{rs.nonzero(), rs.nonzero(), rs.nonzero()});
    const Duality d = duality_verdict(pq);
    CHECK((d == Duality::SelfDual || d == Duality::AntiSelfDual || d == Duality::Both));
    CHECK(duality_verdict(build_family(random_ansatz(rs))) != Duality::AntiSelfDual);
    CHECK(duality_verdict(random_anti_self_dual_einstein(rs)) != Duality::SelfDual);
    CHECK(duality_verdict(random_einstein(rs)) == Duality::Neither);
  }
  CHECK(duality_verdict(build_family(family::Paraquaternionic{1, 2, 3})) == Duality::SelfDual);

  CurvatureTensor::Components c = build_A0().components();
  for (auto [i, j, k, l] : {std::array<std::size_t, 4>{0, 2, 2, 0}, {2, 0, 0, 2}}) c[CurvatureTensor::index(i, j, k, l)] += Scalar(1);
  for (auto [i, j, k, l] : {std::array<std::size_t, 4>{0, 2, 0, 2}, {2, 0, 2, 0}}) c[CurvatureTensor::index(i, j, k, l)] -= Scalar(1);
  const CurvatureTensor perturbed = CurvatureTensor::from_components(c);
  CHECK_FALSE(is_einstein(perturbed));
  CHECK_THROWS_AS(duality_verdict(perturbed), NotEinstein);
}

TEST_CASE("frame component check") {
  RationalSampler rs(6);
  const Scalar ch = Scalar::frac(5, 4), sh = Scalar::frac(3, 4);
  for (int t = 0; t < 10; ++t) {
    const CurvatureTensor asd = random_anti_self_dual_einstein(rs);
    REQUIRE(weyl_operator(asd, 1).matrix.is_zero());
    CHECK(frame_component_check(asd, {e1, e2, e3, e4}).is_zero());
    CHECK(frame_component_check(asd, {e1, e2, e4, -e3}).is_zero());
    CHECK(frame_component_check(asd, {e1, ch * e2 + sh * e3, sh * e2 + ch * e3, e4}).is_zero());
    for (int n = 0; n < 5; ++n) {
      const Mat iso = random_isometry(rs);
      std::array<Vec4, 4> f;
      for (std::size_t j = 0; j < 4; ++j) f[j] = act(iso, basis_vector(j));
      CHECK(frame_component_check(asd, f).is_zero());
    }

    // Transformation identities hold for any tensor.
    const CurvatureTensor a = random_curvature_tensor(rs, 3);
    CHECK(-frame_component_check(a, {e1, e2, e4, -e3}) == a.at("1213") + a.at("1224"));
    CHECK(-frame_component_check(a, {e1, ch * e2 + sh * e3, sh * e2 + ch * e3, e4}) ==
          ch * (-a.at("1214") + a.at("1223")) + sh * (-a.at("1314") + a.at("1323")));
  }
  const CurvatureTensor a0 = build_A0();
  CHECK_THROWS_AS(frame_component_check(a0, {e1, e2, e4, e3}), InvalidFrame);
  CHECK_THROWS_AS(frame_component_check(a0, {e3, e2, e1, e4}), InvalidFrame);
  CHECK_THROWS_AS(frame_component_check(a0, {e1, e2, e3, Scalar(2) * e4}), InvalidFrame);
}

TEST_CASE("null plane diagnostics") {
  CHECK(null_plane_diagnostics(build_A0()).e1.is_zero());
  RationalSampler rs(7);
  const Poly4 pa = Poly4::var(0), pb = Poly4::var(1);
  auto quartic = [&](const NullPlaneDiagnostics& d) {
    return d.q[0] * pa.pow(4) + d.q[1] * pa.pow(3) * pb + d.q[2] * pa.pow(2) * pb.pow(2) + d.q[3] * pa * pb.pow(3) +
           d.q[4] * pb.pow(4);
  };
  for (int t = 0; t < 15; ++t) {
    for (const CurvatureTensor& a : {random_einstein(rs), build_family(random_ansatz(rs))}) {
      const NullPlaneDiagnostics d = null_plane_diagnostics(a);
      const auto cp = char_poly_coefficients(symbolic_jacobi(a, {pa, pb, pa, pb}));
      CHECK(cp[4] == Poly4(Scalar(1)));
      CHECK(cp[3].is_zero());
      CHECK(cp[2] == -(d.e1 * quartic(d)));
      CHECK(cp[1].is_zero());
      CHECK(cp[0].is_zero());
    }
  }
  // Null Osserman with E1 != 0: Q vanishes identically.
  int seen = 0;
  for (int t = 0; t < 40 && seen < 5; ++t) {
    const CurvatureTensor a = build_family(random_ansatz(rs));
    const NullPlaneDiagnostics d = null_plane_diagnostics(a);
    if (d.e1.is_zero()) continue;
    ++seen;
    for (const auto& q : d.q) CHECK(q.is_zero());
  }
  CHECK(seen > 0);
  const CurvatureTensor a = random_curvature_tensor(rs);
  CHECK(null_plane_diagnostics(a).q[1] == Scalar(4) * (a.at("1213") - a.at("1224") - a.at("1314") - a.at("1323")));
}

TEST_CASE("generators of Einstein and half-flat tensors") {
  RationalSampler rs(8);
  for (int t = 0; t < 5; ++t) {
    CHECK(is_einstein(random_einstein(rs)));
    const CurvatureTensor sd = random_self_dual_einstein(rs);
    CHECK(is_einstein(sd));
    CHECK(weyl_operator(sd, -1).matrix.is_zero());
    const CurvatureTensor asd = random_anti_self_dual_einstein(rs);
    CHECK(weyl_operator(asd, 1).matrix.is_zero());
    CHECK_FALSE(is_einstein(perturb_non_einstein(rs, sd)));
  }
}
