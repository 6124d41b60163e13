#include "curv22/curvature.hpp"

#include <sstream>

#include "curv22/errors.hpp"

namespace curv22 {

Vec4 basis_vector(std::size_t i) {
  Vec4 v;
  v.at(i) = Scalar(1);
  return v;
}

Scalar inner(const Vec4& x, const Vec4& y) {
  Scalar s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    if (metric_sign(i) < 0)
      s -= x[i] * y[i];
    else
      s += x[i] * y[i];
  }
  return s;
}

Scalar norm2(const Vec4& x) { return inner(x, x); }

Causal causal_character(const Vec4& x) {
  if (is_zero(x)) return Causal::Zero;
  const int s = norm2(x).sign();
  return s > 0 ? Causal::Spacelike : s < 0 ? Causal::Timelike : Causal::Null;
}

const char* to_string(Causal c) {
  switch (c) {
    case Causal::Spacelike: return "spacelike";
    case Causal::Timelike: return "timelike";
    case Causal::Null: return "null";
    case Causal::Zero: return "zero";
  }
  return "?";
}

bool is_zero(const Vec4& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

Vec4 operator+(const Vec4& a, const Vec4& b) {
  Vec4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] + b[i];
  return r;
}

Vec4 operator-(const Vec4& a, const Vec4& b) {
  Vec4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] - b[i];
  return r;
}

Vec4 operator-(const Vec4& a) {
  Vec4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = -a[i];
  return r;
}

Vec4 operator*(const Scalar& c, const Vec4& a) {
  Vec4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = c * a[i];
  return r;
}

Vec4 act(const Mat& m, const Vec4& x) {
  if (m.size() != 4) throw InvalidArgument("act: matrix must be 4x4");
  Vec4 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!x[j].is_zero()) r[i] += m(i, j) * x[j];
  return r;
}

std::string to_string(const Vec4& x) {
  std::ostringstream os;
  os << '(' << x[0] << ", " << x[1] << ", " << x[2] << ", " << x[3] << ')';
  return os.str();
}

SkewAdjoint::SkewAdjoint(Mat m) : m_(std::move(m)) {
  if (m_.size() != 4) throw InvalidArgument("SkewAdjoint: matrix must be 4x4");
  // <Psi e_j, e_i> = g_ii Psi_ij must be antisymmetric in (i, j).
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      const Scalar a = Scalar(metric_sign(i)) * m_(i, j);
      const Scalar b = Scalar(metric_sign(j)) * m_(j, i);
      if (!(a + b).is_zero())
        throw InvalidArgument("SkewAdjoint: <Psi e" + std::to_string(j + 1) + ", e" + std::to_string(i + 1) +
                              "> != -<e" + std::to_string(j + 1) + ", Psi e" + std::to_string(i + 1) + ">");
    }
}

SkewAdjoint SkewAdjoint::from_images(const std::array<Vec4, 4>& images) {
  Mat m(4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = images[j][i];
  return SkewAdjoint(std::move(m));
}

namespace {

std::string idx(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  std::string s = "(";
  for (std::size_t x : {i, j, k, l}) {
    if (s.size() > 1) s += ',';
    s += std::to_string(x + 1);
  }
  return s + ")";
}

}  // namespace

CurvatureTensor CurvatureTensor::from_components(const Components& raw) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
          const Scalar& a = raw[index(i, j, k, l)];
          if (!(a + raw[index(j, i, k, l)]).is_zero())
            throw SymmetryViolation("antisymmetry A(x,y,z,v) = -A(y,x,z,v) fails: A" + idx(i, j, k, l) + " = " +
                                    a.to_string() + ", A" + idx(j, i, k, l) + " = " +
                                    raw[index(j, i, k, l)].to_string());
          if (a != raw[index(k, l, i, j)])
            throw SymmetryViolation("pair symmetry A(x,y,z,v) = A(z,v,x,y) fails: A" + idx(i, j, k, l) + " = " +
                                    a.to_string() + ", A" + idx(k, l, i, j) + " = " +
                                    raw[index(k, l, i, j)].to_string());
        }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
          const Scalar b = raw[index(i, j, k, l)] + raw[index(j, k, i, l)] + raw[index(k, i, j, l)];
          if (!b.is_zero())
            throw BianchiViolation("first Bianchi identity fails at " + idx(i, j, k, l) + ": cyclic sum = " +
                                   b.to_string());
        }
  return CurvatureTensor(raw);
}

const Scalar& CurvatureTensor::at(std::string_view ijkl) const {
  if (ijkl.size() != 4) throw InvalidArgument("CurvatureTensor::at: expected four digits");
  std::size_t n[4];
  for (std::size_t p = 0; p < 4; ++p) {
    if (ijkl[p] < '1' || ijkl[p] > '4') throw InvalidArgument("CurvatureTensor::at: digits must be 1..4");
    n[p] = static_cast<std::size_t>(ijkl[p] - '1');
  }
  return (*this)(n[0], n[1], n[2], n[3]);
}

bool CurvatureTensor::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

Scalar CurvatureTensor::operator()(const Vec4& x, const Vec4& y, const Vec4& z, const Vec4& v) const {
  Scalar s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < 4; ++k) {
        if (z[k].is_zero()) continue;
        const Scalar xyz = xy * z[k];
        for (std::size_t l = 0; l < 4; ++l) {
          const Scalar& a = c_[index(i, j, k, l)];
          if (a.is_zero() || v[l].is_zero()) continue;
          s += a * xyz * v[l];
        }
      }
    }
  }
  return s;
}

CurvatureTensor CurvatureTensor::in_frame(const std::array<Vec4, 4>& f) const {
  // Contract one slot at a time: 4 * 256 * 4 multiplications instead of 256^2.
  Components t = c_;
  for (int slot = 0; slot < 4; ++slot) {
    Components next;
    for (std::size_t p = 0; p < 256; ++p) {
      std::size_t id[4] = {p / 64, (p / 16) % 4, (p / 4) % 4, p % 4};
      const std::size_t a = id[slot];
      Scalar s;
      for (std::size_t m = 0; m < 4; ++m) {
        if (f[a][m].is_zero()) continue;
        id[slot] = m;
        const Scalar& c = t[index(id[0], id[1], id[2], id[3])];
        if (!c.is_zero()) s += f[a][m] * c;
      }
      next[p] = s;
    }
    t = std::move(next);
  }
  return CurvatureTensor(t);
}

CurvatureTensor& CurvatureTensor::operator+=(const CurvatureTensor& o) {
  for (std::size_t p = 0; p < 256; ++p) c_[p] += o.c_[p];
  return *this;
}

CurvatureTensor& CurvatureTensor::operator-=(const CurvatureTensor& o) {
  for (std::size_t p = 0; p < 256; ++p) c_[p] -= o.c_[p];
  return *this;
}

CurvatureTensor& CurvatureTensor::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

template <class F>
CurvatureTensor CurvatureTensor::tabulate(F&& f) {
  Components c;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) c[index(i, j, k, l)] = f(i, j, k, l);
  return from_components(c);
}

CurvatureTensor build_A_Psi(const SkewAdjoint& psi) {
  // p(a, b) = <Psi e_a, e_b> = g_bb Psi_ba
  Scalar p[4][4];
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) p[a][b] = Scalar(metric_sign(b)) * psi.matrix()(b, a);
  return CurvatureTensor::tabulate([&](std::size_t x, std::size_t y, std::size_t z, std::size_t v) {
    return p[y][z] * p[x][v] - p[x][z] * p[y][v] - Scalar(2) * p[x][y] * p[z][v];
  });
}

CurvatureTensor build_A0() {
  auto g = [](std::size_t a, std::size_t b) { return a == b ? Scalar(metric_sign(a)) : Scalar(0); };
  return CurvatureTensor::tabulate([&](std::size_t x, std::size_t y, std::size_t z, std::size_t v) {
    return g(y, z) * g(x, v) - g(x, z) * g(y, v);
  });
}

ParaquaternionicTriple::ParaquaternionicTriple(SkewAdjoint psi1, SkewAdjoint psi2, SkewAdjoint psi3)
    : psi_{std::move(psi1), std::move(psi2), std::move(psi3)} {
  const Mat id = Mat::identity(4);
  const Mat& a = psi_[0].matrix();
  const Mat& b = psi_[1].matrix();
  const Mat& c = psi_[2].matrix();
  if (!(a * a == -id)) throw InvalidArgument("ParaquaternionicTriple: Psi1^2 != -id");
  if (!(b * b == id)) throw InvalidArgument("ParaquaternionicTriple: Psi2^2 != id");
  if (!(c * c == id)) throw InvalidArgument("ParaquaternionicTriple: Psi3^2 != id");
  if (!(a * b + b * a).is_zero() || !(a * c + c * a).is_zero() || !(b * c + c * b).is_zero())
    throw InvalidArgument("ParaquaternionicTriple: Psi_i Psi_j + Psi_j Psi_i != 0");
  if (!(a * b == c)) throw InvalidArgument("ParaquaternionicTriple: Psi3 != Psi1 Psi2");
}

const ParaquaternionicTriple& standard_paraquaternionic() {
  static const ParaquaternionicTriple triple = [] {
    const Vec4 e1 = basis_vector(0), e2 = basis_vector(1), e3 = basis_vector(2), e4 = basis_vector(3);
    return ParaquaternionicTriple(SkewAdjoint::from_images({-e2, e1, e4, -e3}),
                                  SkewAdjoint::from_images({e3, e4, e1, e2}),
                                  SkewAdjoint::from_images({e4, -e3, -e2, e1}));
  }();
  return triple;
}

Scalar sectional_curvature(const CurvatureTensor& a, const Vec4& x, const Vec4& y) {
  const Scalar xy = inner(x, y);
  const Scalar den = norm2(x) * norm2(y) - xy * xy;
  if (den.is_zero()) throw DegeneratePlane("sectional_curvature: span{x, y} is degenerate");
  return a(x, y, y, x) / den;
}

}  // namespace curv22
