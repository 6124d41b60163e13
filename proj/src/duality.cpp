#include "curv22/duality.hpp"

#include "curv22/errors.hpp"

namespace curv22 {

RicciData ricci(const CurvatureTensor& a) {
  RicciData r{Mat(4), Scalar(), std::nullopt};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      Scalar s;
      for (std::size_t i = 0; i < 4; ++i) {
        if (metric_sign(i) < 0)
          s -= a(i, x, y, i);
        else
          s += a(i, x, y, i);
      }
      r.ricci(x, y) = s;
    }
  for (std::size_t i = 0; i < 4; ++i) r.tau += Scalar(metric_sign(i)) * r.ricci(i, i);
  const Scalar c = r.tau / Scalar(4);
  bool einstein = true;
  for (std::size_t x = 0; x < 4 && einstein; ++x)
    for (std::size_t y = 0; y < 4 && einstein; ++y) {
      const Scalar gxy = x == y ? Scalar(metric_sign(x)) : Scalar(0);
      einstein = r.ricci(x, y) == c * gxy;
    }
  if (einstein) r.einstein_constant = c;
  return r;
}

bool is_einstein(const CurvatureTensor& a) { return ricci(a).einstein_constant.has_value(); }

CurvatureTensor weyl(const CurvatureTensor& a) {
  const RicciData r = ricci(a);
  auto g = [](std::size_t p, std::size_t q) { return p == q ? Scalar(metric_sign(p)) : Scalar(0); };
  const Scalar t6 = r.tau / Scalar(6);
  const Scalar half = Scalar::frac(1, 2);
  CurvatureTensor::Components c = a.components();
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      for (std::size_t z = 0; z < 4; ++z)
        for (std::size_t v = 0; v < 4; ++v) {
          const Scalar& rho_yz = r.ricci(y, z);
          const Scalar& rho_xz = r.ricci(x, z);
          const Scalar& rho_xv = r.ricci(x, v);
          const Scalar& rho_yv = r.ricci(y, v);
          c[CurvatureTensor::index(x, y, z, v)] +=
              t6 * (g(y, z) * g(x, v) - g(x, z) * g(y, v)) -
              half * (rho_yz * g(x, v) - rho_xz * g(y, v) + rho_xv * g(y, z) - rho_yv * g(x, z));
        }
  return CurvatureTensor::from_components(c);
}

const std::array<std::pair<std::size_t, std::size_t>, 6>& two_form_pairs() {
  static const std::array<std::pair<std::size_t, std::size_t>, 6> p = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return p;
}

TwoForm hodge_star(const TwoForm& w) {
  // *e12 = e34, *e13 = e24, *e14 = -e23, *e23 = -e14, *e24 = e13, *e34 = e12
  const auto& c = w.c;
  return TwoForm{{c[5], c[4], -c[3], -c[2], c[1], c[0]}};
}

Scalar inner(const TwoForm& a, const TwoForm& b) {
  Scalar s;
  for (std::size_t p = 0; p < 6; ++p) {
    const auto [i, j] = two_form_pairs()[p];
    s += Scalar(metric_sign(i) * metric_sign(j)) * a.c[p] * b.c[p];
  }
  return s;
}

Scalar wedge(const TwoForm& a, const TwoForm& b) {
  // e12^e34 = e13^e42 = e14^e23 = e1234
  const auto& x = a.c;
  const auto& y = b.c;
  return x[0] * y[5] + x[5] * y[0] - x[1] * y[4] - x[4] * y[1] + x[2] * y[3] + x[3] * y[2];
}

std::array<TwoForm, 3> lambda_basis(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("lambda_basis: epsilon must be +1 or -1");
  const Scalar e(epsilon);
  return {TwoForm{{1, 0, 0, 0, 0, e}}, TwoForm{{0, 1, 0, 0, e, 0}}, TwoForm{{0, 0, 1, -e, 0, 0}}};
}

WeylOperatorMatrix weyl_operator(const CurvatureTensor& a, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("weyl_operator: epsilon must be +1 or -1");
  if (!is_einstein(a)) throw NotEinstein("weyl_operator: the Ricci tensor is not a multiple of the metric");
  const Scalar e(epsilon);
  auto c = [&](const char* s) { return a.at(s); };
  const Scalar s1 = Scalar(2) * c("1212") + Scalar(3) * e * c("1234") + c("1313") + c("1414");
  const Scalar s2 = c("1212") + Scalar(2) * c("1313") + Scalar(3) * e * c("1324") - c("1414");
  const Scalar s3 = c("1212") + Scalar(3) * e * c("1234") - c("1313") - Scalar(3) * e * c("1324") +
                    Scalar(2) * c("1414");
  const Scalar third = Scalar::frac(1, 3);
  const Scalar m12 = c("1213") + e * c("1224");
  const Scalar m13 = c("1214") - e * c("1223");
  const Scalar m23 = -c("1314") + e * c("1323");
  return {epsilon, Mat(3, {third * s1, m12, m13, -m12, -third * s2, m23, -m13, m23, -third * s3})};
}

Mat weyl_operator_direct(const CurvatureTensor& a, int epsilon) {
  const CurvatureTensor w = weyl(a);
  const auto basis = lambda_basis(epsilon);
  const auto& pairs = two_form_pairs();
  // <W(phi), eta> = sum_{p,q} phi_p eta_q W(e_i, e_j, e_k, e_l) with p = (i,j), q = (k,l).
  auto pairing = [&](const TwoForm& phi, const TwoForm& eta) {
    Scalar s;
    for (std::size_t p = 0; p < 6; ++p) {
      if (phi.c[p].is_zero()) continue;
      for (std::size_t q = 0; q < 6; ++q) {
        if (eta.c[q].is_zero()) continue;
        const auto [i, j] = pairs[p];
        const auto [k, l] = pairs[q];
        s += phi.c[p] * eta.c[q] * w(i, j, k, l);
      }
    }
    return s;
  };
  Mat m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = pairing(basis[j], basis[i]) / inner(basis[i], basis[i]);
  return m;
}

const char* to_string(Duality d) {
  switch (d) {
    case Duality::SelfDual: return "self-dual";
    case Duality::AntiSelfDual: return "anti-self-dual";
    case Duality::Both: return "both";
    case Duality::Neither: return "neither";
  }
  return "?";
}

Duality duality_verdict(const CurvatureTensor& a) {
  const bool plus_zero = weyl_operator(a, 1).matrix.is_zero();
  const bool minus_zero = weyl_operator(a, -1).matrix.is_zero();
  if (plus_zero && minus_zero) return Duality::Both;
  if (minus_zero) return Duality::SelfDual;
  if (plus_zero) return Duality::AntiSelfDual;
  return Duality::Neither;
}

Scalar frame_component_check(const CurvatureTensor& a, const std::array<Vec4, 4>& frame) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Scalar expected = i == j ? Scalar(metric_sign(i)) : Scalar(0);
      if (inner(frame[i], frame[j]) != expected)
        throw InvalidFrame("frame_component_check: <f" + std::to_string(i + 1) + ", f" + std::to_string(j + 1) +
                           "> = " + inner(frame[i], frame[j]).to_string() + ", expected " + expected.to_string());
    }
  Mat f(4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) f(i, j) = frame[j][i];
  if (determinant(f).sign() < 0) throw InvalidFrame("frame_component_check: frame is negatively oriented");
  const Vec4& f1 = frame[0];
  const Vec4& f2 = frame[1];
  const Vec4& f3 = frame[2];
  const Vec4& f4 = frame[3];
  return a(f1, f2, f1, f4) - a(f1, f2, f2, f3);
}

NullPlaneDiagnostics null_plane_diagnostics(const CurvatureTensor& a) {
  auto c = [&](const char* s) { return a.at(s); };
  NullPlaneDiagnostics d;
  d.e1 = c("1212") + Scalar(2) * c("1214") - Scalar(2) * c("1223") + Scalar(2) * c("1234") - c("1324") + c("1414");
  d.q[0] = c("1212") - Scalar(2) * c("1214") - Scalar(2) * c("1223") - Scalar(2) * c("1234") + c("1324") + c("1414");
  d.q[1] = Scalar(4) * (c("1213") - c("1224") - c("1314") - c("1323"));
  d.q[2] = Scalar(2) * (c("1212") + Scalar(2) * c("1313") - Scalar(3) * c("1324") - c("1414"));
  d.q[3] = Scalar(4) * (c("1213") - c("1224") + c("1314") + c("1323"));
  d.q[4] = c("1212") + Scalar(2) * c("1214") + Scalar(2) * c("1223") - Scalar(2) * c("1234") + c("1324") + c("1414");
  return d;
}

}  // namespace curv22
