#include "curv22/jacobi.hpp"

#include "curv22/errors.hpp"

namespace curv22 {

JacobiOperator jacobi(const CurvatureTensor& a, const Vec4& x) {
  // xx[b][c] = x_b x_c
  Scalar xx[4][4];
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t c = 0; c < 4; ++c) xx[b][c] = x[b] * x[c];
  Mat m(4);
  for (std::size_t y = 0; y < 4; ++y)
    for (std::size_t z = 0; z < 4; ++z) {
      Scalar s;
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t c = 0; c < 4; ++c) {
          const Scalar& comp = a(y, b, c, z);
          if (!comp.is_zero() && !xx[b][c].is_zero()) s += comp * xx[b][c];
        }
      m(z, y) = metric_sign(z) < 0 ? -s : s;
    }
  return {x, std::move(m)};
}

Matrix<Poly4> symbolic_jacobi(const CurvatureTensor& a, const std::array<Poly4, 4>& x) {
  Poly4 xx[4][4];
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t c = b; c < 4; ++c) xx[b][c] = x[b] * x[c];
  Matrix<Poly4> m(4);
  for (std::size_t y = 0; y < 4; ++y)
    for (std::size_t z = 0; z < 4; ++z) {
      Poly4 s;
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t c = b; c < 4; ++c) {
          // A(e_y, e_b, e_c, e_z) + A(e_y, e_c, e_b, e_z) multiplies x_b x_c once for b < c.
          Scalar comp = a(y, b, c, z);
          if (b != c) comp += a(y, c, b, z);
          if (!comp.is_zero()) s += xx[b][c] * comp;
        }
      m(z, y) = metric_sign(z) < 0 ? -s : s;
    }
  return m;
}

Matrix<Poly4> symbolic_jacobi(const CurvatureTensor& a) {
  return symbolic_jacobi(a, {Poly4::var(0), Poly4::var(1), Poly4::var(2), Poly4::var(3)});
}

RestrictedOperator restrict_jacobi(const CurvatureTensor& a, const Vec4& x) {
  const Scalar n = norm2(x);
  if (n != Scalar(1) && n != Scalar(-1))
    throw NonUnitVector("restrict: <x,x> = " + n.to_string() + ", expected +1 or -1");
  const auto& triple = standard_paraquaternionic();
  RestrictedOperator r{x, {triple[0](x), triple[1](x), triple[2](x)}, {}, Mat(3)};
  for (std::size_t k = 0; k < 3; ++k) r.frame_signs[k] = norm2(r.frame[k]).sign();
  const Mat j = jacobi(a, x).matrix;
  for (std::size_t col = 0; col < 3; ++col) {
    const Vec4 image = act(j, r.frame[col]);
    for (std::size_t row = 0; row < 3; ++row) {
      const Scalar c = inner(image, r.frame[row]);
      r.matrix(row, col) = r.frame_signs[row] < 0 ? -c : c;
    }
  }
  return r;
}

const char* to_string(JordanType t) {
  switch (t) {
    case JordanType::Ia: return "Ia";
    case JordanType::Ib: return "Ib";
    case JordanType::II: return "II";
    case JordanType::III: return "III";
  }
  return "?";
}

const char* to_string(EigenspaceCausal c) {
  switch (c) {
    case EigenspaceCausal::Spacelike: return "spacelike";
    case EigenspaceCausal::Timelike: return "timelike";
    case EigenspaceCausal::Mixed: return "mixed";
    case EigenspaceCausal::Unknown: return "unknown";
  }
  return "?";
}

namespace {

Poly1 entry_poly(const Mat& m, std::size_t r, std::size_t c, bool diag_shift) {
  // Entry (r,c) of x*I - m.
  Poly1 p(-m(r, c));
  if (diag_shift && r == c) p += Poly1::monomial(Scalar(1), 1);
  return p;
}

// Diagonal entry i of adj(x*I - m) for a 3x3 m, as a polynomial in x.
Poly1 adjugate_diagonal(const Mat& m, std::size_t i) {
  const std::size_t a = (i + 1) % 3, b = (i + 2) % 3;
  return entry_poly(m, a, a, true) * entry_poly(m, b, b, true) - entry_poly(m, a, b, true) * entry_poly(m, b, a, true);
}

Mat shifted(const Mat& m, const Scalar& lambda) { return m - lambda * Mat::identity(m.size()); }

EigenspaceCausal classify_gram(const std::vector<std::vector<Scalar>>& basis, const std::array<int, 3>& signs) {
  const std::size_t k = basis.size();
  std::vector<std::vector<Scalar>> gram(k, std::vector<Scalar>(k));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      for (std::size_t i = 0; i < 3; ++i) gram[p][q] += Scalar(signs[i]) * basis[p][i] * basis[q][i];
  if (k == 1) {
    const int s = gram[0][0].sign();
    return s > 0 ? EigenspaceCausal::Spacelike : s < 0 ? EigenspaceCausal::Timelike : EigenspaceCausal::Unknown;
  }
  if (k == 2) {
    const Scalar det = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0];
    if (det.sign() < 0) return EigenspaceCausal::Mixed;
    if (det.sign() > 0) return gram[0][0].sign() > 0 ? EigenspaceCausal::Spacelike : EigenspaceCausal::Timelike;
    return EigenspaceCausal::Unknown;
  }
  return EigenspaceCausal::Mixed;
}

}  // namespace

int simple_eigenvector_sign(const Mat& m, const std::array<int, 3>& frame_signs, RootIsolation& iso,
                            std::size_t index) {
  // For a simple root l, adj(l I - m) = c w (G w)^T with <w,w> c = p'(l), and
  // (G adj)_ii = c (G w)_i^2, so sign <w,w> = sign p'(l) * sign (G adj)_ii.
  const Poly1 dp = char_poly(m).derivative();
  const int sp = iso.sign_at(index, dp);
  if (sp == 0) throw InvalidArgument("simple_eigenvector_sign: root is not simple");
  for (std::size_t i = 0; i < 3; ++i) {
    const int sd = iso.sign_at(index, adjugate_diagonal(m, i));
    if (sd != 0) return sp * sd * frame_signs[i];
  }
  throw InternalError("simple_eigenvector_sign: adjugate diagonal vanishes identically");
}

JordanReport jordan_classify(const Mat& m, const std::array<int, 3>& frame_signs) {
  if (m.size() != 3) throw InvalidArgument("jordan_classify: expected a 3x3 operator");
  JordanReport rep;
  rep.frame_signs = frame_signs;
  rep.char_poly = char_poly(m);
  rep.isolation = isolate_real_roots(rep.char_poly);
  const Poly1& s = rep.isolation.squarefree_part();

  int real_count = 0;
  for (std::size_t i = 0; i < rep.isolation.size(); ++i) real_count += rep.isolation[i].multiplicity;

  Poly1 power = s;
  int k = 1;
  while (!evaluate_at(power, m).is_zero()) {
    power *= s;
    ++k;
  }
  rep.min_poly = power;

  if (real_count < 3)
    rep.type = JordanType::Ib;
  else
    rep.type = k == 1 ? JordanType::Ia : k == 2 ? JordanType::II : JordanType::III;

  for (std::size_t i = 0; i < rep.isolation.size(); ++i) {
    const RealRoot& r = rep.isolation[i];
    Eigenvalue e{r.lo, r.hi, r.exact, r.multiplicity, EigenspaceCausal::Unknown, {}};
    if (r.exact) e.eigenspace = kernel_basis(shifted(m, *r.exact));
    if (rep.type == JordanType::Ia) {
      if (r.exact)
        e.causal = classify_gram(e.eigenspace, frame_signs);
      else
        e.causal = simple_eigenvector_sign(m, frame_signs, rep.isolation, i) > 0 ? EigenspaceCausal::Spacelike
                                                                                : EigenspaceCausal::Timelike;
    }
    rep.roots.push_back(std::move(e));
  }
  // Refinement inside simple_eigenvector_sign may have narrowed intervals.
  for (std::size_t i = 0; i < rep.roots.size(); ++i) {
    rep.roots[i].lo = rep.isolation[i].lo;
    rep.roots[i].hi = rep.isolation[i].hi;
  }
  return rep;
}

JordanReport jordan_classify(const RestrictedOperator& op) { return jordan_classify(op.matrix, op.frame_signs); }

RankProfile null_rank_profile(const CurvatureTensor& a, const Vec4& v) {
  if (is_zero(v)) throw ZeroVector("null_rank_profile: v = 0");
  const Scalar n = norm2(v);
  if (!n.is_zero()) throw NotNull("null_rank_profile: <v,v> = " + n.to_string());
  const Mat j = jacobi(a, v).matrix;
  return {rank(j), rank(j * j)};
}

}  // namespace curv22
