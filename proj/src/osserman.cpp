#include "curv22/osserman.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "curv22/errors.hpp"
#include "curv22/random.hpp"

namespace curv22 {

namespace {

// Tr J^k for k = 1..4 of the symbolic Jacobi operator, using only J and J^2.
std::array<Poly4, 4> trace_powers(const CurvatureTensor& a) {
  const Matrix<Poly4> j = symbolic_jacobi(a);
  const Matrix<Poly4> j2 = j * j;
  Poly4 t3, t4;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      t3 += j2(r, c) * j(c, r);
      t4 += j2(r, c) * j2(c, r);
    }
  return {j.trace(), j2.trace(), std::move(t3), std::move(t4)};
}

OssermanCertificate check_powers(const std::array<Poly4, 4>& t, const Vec4& base, const Poly4& norm) {
  OssermanCertificate cert;
  cert.holds = true;
  for (int j = 1; j <= 3; ++j) {
    cert.constants[j - 1] = t[j - 1].eval(base);
    if (!cert.holds) continue;
    Poly4 r = t[j - 1] - cert.constants[j - 1] * norm.pow(j);
    if (!r.is_zero()) {
      cert.holds = false;
      cert.failing_power = j;
      cert.residual = std::move(r);
    }
  }
  return cert;
}

// Coefficients of det(l I - J) from the power traces (Newton's identities);
// c[4 - k] multiplies l^(4-k).
std::array<Poly4, 5> char_poly_from_traces(const std::array<Poly4, 4>& p) {
  std::array<Poly4, 5> e;
  e[0] = Poly4(Scalar(1));
  for (int k = 1; k <= 4; ++k) {
    Poly4 s;
    for (int i = 1; i <= k; ++i) {
      Poly4 term = e[k - i] * p[i - 1];
      if (i % 2 == 0) s -= term;
      else s += term;
    }
    e[k] = s / Scalar(k);
  }
  std::array<Poly4, 5> c;
  for (int k = 0; k <= 4; ++k) c[4 - k] = k % 2 ? -e[k] : e[k];
  return c;
}

NullOssermanCertificate null_from_traces(const std::array<Poly4, 4>& t) {
  NullOssermanCertificate cert;
  cert.holds = true;
  const auto c = char_poly_from_traces(t);
  const Poly4 q = Poly4::neutral_quadric();
  for (int k = 1; k <= 4; ++k) {
    Poly4 r = reduce_mod_quadric(c[4 - k], q);
    if (!r.is_zero()) {
      cert.holds = false;
      cert.failing_coefficient = k;
      cert.remainder = std::move(r);
      break;
    }
  }
  return cert;
}

std::pair<Scalar, Scalar> half_angle(const Rational& t, bool flip) {
  const Rational d = 1 + t * t;
  Scalar c(Rational((1 - t * t) / d));
  Scalar s(Rational(2 * t / d));
  if (flip) return {-c, -s};
  return {c, s};
}

// Coarse-to-fine ordering of {k/den : |k| <= den}.
std::vector<Rational> grid_values(int den) {
  std::vector<Rational> v;
  for (int k = -den; k <= den; ++k) {
    Rational q(k, den);
    q.canonicalize();
    v.push_back(q);
  }
  std::stable_sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) {
    const int da = static_cast<int>(a.get_den().get_si());
    const int db = static_cast<int>(b.get_den().get_si());
    if (da != db) return da < db;
    const Rational aa = abs(a), ab = abs(b);
    if (aa != ab) return aa < ab;
    return a > b;
  });
  return v;
}

SurveyResult survey_unchecked(const CurvatureTensor& a, const std::vector<NullDirection>& grid) {
  if (grid.empty()) throw InvalidArgument("null_jordan_rank_survey: empty grid");
  const RankProfile first = null_rank_profile(a, grid[0].vector());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const RankProfile p = null_rank_profile(a, grid[i].vector());
    if (!(p == first)) return RankWitness{grid[0], grid[i], first, p};
  }
  return SurveyConstant{first, grid.size()};
}

Parameter exact_param(std::string name, const Scalar& v) { return {std::move(name), v, 0, 0}; }

// Parameter k = scale * root for a root isolated in (lo, hi].
Parameter root_param(std::string name, RootIsolation& iso, std::size_t i, const Scalar& scale) {
  const RealRoot& r = iso[i];
  if (r.exact) return exact_param(std::move(name), scale * *r.exact);
  iso.refine(i, Rational(1, 1000000000));
  const Rational s = scale.rat();
  Rational lo = iso[i].lo * s, hi = iso[i].hi * s;
  if (lo > hi) std::swap(lo, hi);
  return {std::move(name), std::nullopt, lo, hi};
}

Scalar frame_norm(const std::vector<Scalar>& w, const std::array<int, 3>& signs) {
  Scalar n;
  for (std::size_t i = 0; i < 3; ++i) n += Scalar(signs[i]) * w[i] * w[i];
  return n;
}

// |w_idx|^2 / |<w,w>|, the weight of frame direction idx in the unit eigenvector.
Scalar alignment(const std::vector<Scalar>& w, const std::array<int, 3>& signs, std::size_t idx) {
  return w[idx] * w[idx] * frame_norm(w, signs).abs().inverse();
}

Matrix<Poly4> symmetric2(const Poly4& a, const Poly4& b, const Poly4& d) {
  Matrix<Poly4> m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = b;
  m(1, 1) = d;
  return m;
}

}  // namespace

Poly4 trace_power_poly(const CurvatureTensor& a, int j) {
  if (j < 1) throw InvalidArgument("trace_power_poly: j must be positive");
  const Matrix<Poly4> s = symbolic_jacobi(a);
  Matrix<Poly4> p = s;
  for (int k = 1; k < j; ++k) p = p * s;
  return p.trace();
}

OssermanCertificate spacelike_osserman(const CurvatureTensor& a) {
  return check_powers(trace_powers(a), basis_vector(2), Poly4::neutral_quadric());
}

OssermanCertificate timelike_osserman(const CurvatureTensor& a) {
  return check_powers(trace_powers(a), basis_vector(0), -Poly4::neutral_quadric());
}

NullOssermanCertificate null_osserman(const CurvatureTensor& a) { return null_from_traces(trace_powers(a)); }

OssermanReport osserman_report(const CurvatureTensor& a) {
  OssermanReport rep;
  const std::array<Poly4, 4> t = trace_powers(a);
  rep.spacelike = check_powers(t, basis_vector(2), Poly4::neutral_quadric());
  rep.timelike = check_powers(t, basis_vector(0), -Poly4::neutral_quadric());
  rep.einstein = is_einstein(a);
  if (rep.einstein) {
    rep.duality = duality_verdict(a);
    rep.einstein_and_half_flat = *rep.duality != Duality::Neither;
  }
  rep.null = null_from_traces(t);
  const bool s = rep.spacelike.holds;
  rep.agreement = rep.timelike.holds == s && rep.einstein_and_half_flat == s && rep.null.holds == s;
  return rep;
}

Vec4 NullDirection::vector() const {
  const auto [ct, st] = half_angle(t, flip_theta);
  const auto [cu, su] = half_angle(u, flip_phi);
  return {ct, st, cu, su};
}

std::string NullDirection::label() const {
  std::ostringstream os;
  os << "t=" << rational_to_string(t) << (flip_theta ? "'" : "") << ",u=" << rational_to_string(u)
     << (flip_phi ? "'" : "");
  return os.str();
}

std::vector<NullDirection> default_null_grid(std::uint64_t seed, int random_points, int denominator) {
  if (denominator < 1) throw InvalidArgument("default_null_grid: denominator must be positive");
  if (random_points < 0) throw InvalidArgument("default_null_grid: negative random point count");
  const std::vector<Rational> vals = grid_values(denominator);
  std::vector<NullDirection> grid;
  grid.reserve(vals.size() * vals.size() + static_cast<std::size_t>(random_points));
  for (const Rational& t : vals)
    for (const Rational& u : vals) grid.push_back({t, u, false, false});
  RationalSampler rs(seed);
  for (int i = 0; i < random_points; ++i) {
    NullDirection d;
    d.t = rs.rational();
    d.u = rs.rational();
    d.flip_theta = rs.coin();
    d.flip_phi = rs.coin();
    grid.push_back(d);
  }
  return grid;
}

SurveyResult null_jordan_rank_survey(const CurvatureTensor& a, const std::vector<NullDirection>& grid) {
  if (grid.empty()) throw InvalidArgument("null_jordan_rank_survey: empty grid");
  const NullOssermanCertificate cert = null_osserman(a);
  if (!cert.holds)
    throw NotNullOsserman("null_jordan_rank_survey: coefficient " + std::to_string(cert.failing_coefficient) +
                          " of the characteristic polynomial does not vanish on the null cone");
  return survey_unchecked(a, grid);
}

Scalar rank_drop_determinant(const CurvatureTensor& a, const Vec4& v) {
  const Mat j = jacobi(a, v).matrix;
  return j(2, 2) * j(3, 3) - j(2, 3) * j(3, 2);
}

std::optional<SignChangeWitness> find_sign_change(const CurvatureTensor& a, const std::vector<NullDirection>& grid) {
  std::optional<std::pair<NullDirection, Scalar>> pos, neg;
  for (const NullDirection& d : grid) {
    Scalar v = rank_drop_determinant(a, d.vector());
    if (v.sign() > 0 && !pos) pos.emplace(d, v);
    if (v.sign() < 0 && !neg) neg.emplace(d, v);
    if (pos && neg) return SignChangeWitness{pos->first, neg->first, pos->second, neg->second};
  }
  return std::nullopt;
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::ConstantCurvature: return "constant";
    case VerdictKind::ComplexForm: return "complex";
    case VerdictKind::Paracomplex: return "paracomplex";
    case VerdictKind::Paraquaternionic: return "paraquaternionic";
    case VerdictKind::NotNJO: return "not_null_jordan_osserman";
  }
  return "?";
}

const char* to_string(NotNJOReason r) {
  switch (r) {
    case NotNJOReason::None: return "none";
    case NotNJOReason::NotOsserman: return "NotOsserman";
    case NotNJOReason::WrongType: return "WrongType";
    case NotNJOReason::IneqFails: return "IneqFails";
    case NotNJOReason::MixedEigenspace: return "MixedEigenspace";
  }
  return "?";
}

ClassificationVerdict classify_null_jordan(const CurvatureTensor& a, const ClassifyOptions& opt) {
  ClassificationVerdict v;
  v.osserman = osserman_report(a);
  if (!v.osserman.agreement)
    throw InternalError("classify_null_jordan: Osserman conditions disagree (spacelike " +
                        std::string(v.osserman.spacelike.holds ? "true" : "false") + ")");
  if (!v.osserman.osserman()) {
    v.reason = NotNJOReason::NotOsserman;
    return v;
  }

  const RestrictedOperator op = restrict_jacobi(a, basis_vector(2));
  v.jordan = jordan_classify(op);
  JordanReport& jr = *v.jordan;

  if (jr.type != JordanType::Ia) {
    v.reason = NotNJOReason::WrongType;
    const Vec4 u = basis_vector(1) - basis_vector(2);
    const Vec4 w = basis_vector(1) + basis_vector(2);
    const RankProfile pu = null_rank_profile(a, u), pw = null_rank_profile(a, w);
    if (!(pu == pw)) v.vector_witnesses.push_back({"e2-e3", "e2+e3", u, w, pu, pw});
  } else {
    const auto& roots = jr.roots;
    const auto exact = [&](std::size_t i) -> const Scalar& {
      if (!roots[i].exact) throw InternalError("classify_null_jordan: repeated root not exact");
      return *roots[i].exact;
    };
    if (roots.size() == 1) {
      v.kind = VerdictKind::ConstantCurvature;
      v.params.push_back(exact_param("k0", exact(0)));
    } else if (roots.size() == 2) {
      const std::size_t di = roots[0].multiplicity == 2 ? 0 : 1;
      const Scalar& d = exact(di);
      const Scalar& s = exact(1 - di);
      switch (roots[di].causal) {
        case EigenspaceCausal::Timelike:
          v.kind = VerdictKind::ComplexForm;
          v.params.push_back(exact_param("k0", d));
          v.params.push_back(exact_param("kJ", (s - d) / Scalar(3)));
          break;
        case EigenspaceCausal::Mixed:
          if (d.is_zero()) {
            v.kind = VerdictKind::Paracomplex;
            v.params.push_back(exact_param("kP", -s / Scalar(3)));
          } else {
            v.reason = NotNJOReason::MixedEigenspace;
          }
          break;
        default:
          throw InternalError(std::string("classify_null_jordan: double eigenspace is ") +
                              to_string(roots[di].causal));
      }
    } else {
      std::vector<std::size_t> spacelike, timelike;
      for (std::size_t i = 0; i < 3; ++i) {
        if (roots[i].causal == EigenspaceCausal::Spacelike) spacelike.push_back(i);
        else if (roots[i].causal == EigenspaceCausal::Timelike) timelike.push_back(i);
      }
      if (spacelike.size() != 1 || timelike.size() != 2)
        throw InternalError("classify_null_jordan: eigenvector causal characters do not match (+,-,-)");
      const std::size_t r = spacelike[0];
      std::size_t m2 = timelike[0], m3 = timelike[1];
      if (roots[m2].exact && roots[m3].exact) {
        const auto& w2 = roots[m2].eigenspace.at(0);
        const auto& w3 = roots[m3].eigenspace.at(0);
        const auto& sg = jr.frame_signs;
        if (alignment(w2, sg, 2) + alignment(w3, sg, 1) > alignment(w2, sg, 1) + alignment(w3, sg, 2))
          std::swap(m2, m3);
      }
      // The quartic k2 k3 (k2 + k1)(k3 + k1) equals mu nu (rho - mu)(rho - nu) / 81
      // with rho = 3 k1 and mu, nu = -3 k2, -3 k3, which is p'(rho)(rho^2 - tr rho + e2) / 81.
      const Poly1& p = jr.char_poly;
      const Poly1 tail({p.coeff(1), p.coeff(2), Scalar(1)});
      v.inequality_sign = jr.isolation.sign_at(r, p.derivative() * tail);
      v.params.push_back(root_param("k1", jr.isolation, r, Scalar::frac(1, 3)));
      v.params.push_back(root_param("k2", jr.isolation, m2, Scalar::frac(-1, 3)));
      v.params.push_back(root_param("k3", jr.isolation, m3, Scalar::frac(-1, 3)));
      if (v.params[0].exact && v.params[1].exact && v.params[2].exact) {
        const Scalar &k1 = *v.params[0].exact, &k2 = *v.params[1].exact, &k3 = *v.params[2].exact;
        v.inequality = paraquaternionic_quartic(k1, k2, k3);
        if (v.inequality->sign() != v.inequality_sign)
          throw InternalError("classify_null_jordan: quartic sign mismatch");
        if (!k2.is_zero() && !(k3 + k1).is_zero()) v.cross_ratio = cross_ratio(k1, k2, k3);
      }
      if (v.inequality_sign > 0) {
        v.kind = VerdictKind::Paraquaternionic;
      } else {
        v.reason = NotNJOReason::IneqFails;
      }
    }
  }

  const std::vector<NullDirection> grid = default_null_grid(opt.grid_seed, opt.random_points, opt.grid_denominator);
  v.survey = survey_unchecked(a, grid);
  const auto* witness = std::get_if<RankWitness>(&*v.survey);
  if (v.is_family()) {
    if (witness)
      throw InternalError("classify_null_jordan: family verdict but rank profile changes between " +
                          witness->first.label() + " and " + witness->second.label());
    if (auto sc = find_sign_change(a, grid))
      throw InternalError("classify_null_jordan: family verdict but rank-drop determinant changes sign between " +
                          sc->positive.label() + " and " + sc->negative.label());
    return v;
  }
  if (witness) v.rank_witness = *witness;
  v.sign_change = find_sign_change(a, grid);
  return v;
}

Matrix<Poly4> coefficient_matrix(const CoefficientMatrixFamily& f) {
  const Poly4 c = Poly4::var(0), s = Poly4::var(1);
  if (const auto* pq = std::get_if<CoefficientMatrixFamily::Paraquaternionic>(&f.params)) {
    const Scalar three(3);
    return symmetric2(three * (pq->k2 * c * c + pq->k3 * s * s), three * ((pq->k3 - pq->k2) * s * c),
                      three * (Poly4(pq->k1) + pq->k2 * s * s + pq->k3 * c * c));
  }
  const auto& ib = std::get<CoefficientMatrixFamily::TypeIb>(f.params);
  return symmetric2(-ib.a * c * c + ib.c * s * s, ib.b * c + (ib.a + ib.c) * s * c,
                    Scalar(-2) * ib.b * s + (ib.a + ib.c) * c * c);
}

Poly4 coefficient_matrix_det(const CoefficientMatrixFamily& f) {
  const Matrix<Poly4> m = coefficient_matrix(f);
  return reduce_mod_circle(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
}

Poly4 paraquaternionic_det_closed_form(const Scalar& k1, const Scalar& k2, const Scalar& k3) {
  const Poly4 c = Poly4::var(0), s = Poly4::var(1);
  return reduce_mod_circle(Scalar(9) * ((k1 + k3) * k2 * c * c + (k1 + k2) * k3 * s * s));
}

Scalar eval_on_circle(const Poly4& p, const Scalar& c, const Scalar& s) {
  if (c * c + s * s != Scalar(1))
    throw InvalidArgument("eval_on_circle: (" + c.to_string() + ", " + s.to_string() + ") is not on the unit circle");
  return p.eval({c, s, Scalar(0), Scalar(0)});
}

bool nonvanishing_on_circle(const Poly4& p) {
  if (p.is_zero()) return false;
  for (const auto& [m, coef] : p.terms())
    if (m[2] != 0 || m[3] != 0) throw InvalidArgument("nonvanishing_on_circle: only c = v1 and s = v2 may occur");
  if (p.eval({Scalar(-1), Scalar(0), Scalar(0), Scalar(0)}).is_zero()) return false;
  // Away from (-1, 0): c = (1 - t^2)/(1 + t^2), s = 2t/(1 + t^2), cleared by (1 + t^2)^deg.
  const int deg = p.degree();
  const Poly1 one_minus({Scalar(1), Scalar(0), Scalar(-1)});
  const Poly1 two_t({Scalar(0), Scalar(2)});
  const Poly1 one_plus({Scalar(1), Scalar(0), Scalar(1)});
  Poly1 n;
  for (const auto& [m, coef] : p.terms()) {
    Poly1 term(coef);
    for (int i = 0; i < m[0]; ++i) term *= one_minus;
    for (int i = 0; i < m[1]; ++i) term *= two_t;
    for (int i = m[0] + m[1]; i < deg; ++i) term *= one_plus;
    n += term;
  }
  if (n.is_zero()) return false;
  return count_real_roots(n) == 0;
}

Scalar paraquaternionic_quartic(const Scalar& k1, const Scalar& k2, const Scalar& k3) {
  return k2 * k3 * (k2 + k1) * (k3 + k1);
}

Scalar cross_ratio(const Scalar& k1, const Scalar& k2, const Scalar& k3) {
  const Scalar den = k2 * (k3 + k1);
  if (den.is_zero())
    throw DenominatorZero("cross ratio: k2 (k3 + k1) = 0 for (" + k1.to_string() + ", " + k2.to_string() + ", " +
                          k3.to_string() + ")");
  return k3 * (k2 + k1) / den;
}

bool cross_ratio_predicate(const Scalar& k1, const Scalar& k2, const Scalar& k3) {
  return cross_ratio(k1, k2, k3).sign() > 0;
}

}  // namespace curv22
