#ifndef CURV22_CURVATURE_HPP
#define CURV22_CURVATURE_HPP

#include <array>
#include <string>
#include <string_view>

#include "curv22/matrix.hpp"
#include "curv22/scalar.hpp"

namespace curv22 {

/// Vector in the standard basis e1..e4 (index 0..3).
using Vec4 = std::array<Scalar, 4>;

/// Diagonal of the Gram matrix g = diag(-1,-1,+1,+1): e1, e2 timelike, e3, e4 spacelike.
inline int metric_sign(std::size_t i) { return i < 2 ? -1 : 1; }

Vec4 basis_vector(std::size_t i);
Scalar inner(const Vec4& x, const Vec4& y);
/// <x,x>
Scalar norm2(const Vec4& x);

enum class Causal { Spacelike, Timelike, Null, Zero };
Causal causal_character(const Vec4& x);
const char* to_string(Causal c);

bool is_zero(const Vec4& x);
Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a);
Vec4 operator*(const Scalar& c, const Vec4& a);
Vec4 act(const Mat& m, const Vec4& x);
std::string to_string(const Vec4& x);

/// Endomorphism with <Psi x, y> = -<x, Psi y>. Columns are the images of e1..e4.
class SkewAdjoint {
 public:
  SkewAdjoint() : m_(4) {}
  /// Throws InvalidArgument unless m is 4x4 and g*m is antisymmetric.
  explicit SkewAdjoint(Mat m);
  /// Builds the operator from the images of e1..e4.
  static SkewAdjoint from_images(const std::array<Vec4, 4>& images);

  const Mat& matrix() const { return m_; }
  Vec4 operator()(const Vec4& x) const { return act(m_, x); }

  friend SkewAdjoint operator+(const SkewAdjoint& a, const SkewAdjoint& b) {
    return SkewAdjoint(a.m_ + b.m_);
  }
  friend SkewAdjoint operator*(const Scalar& c, const SkewAdjoint& a) { return SkewAdjoint(c * a.m_); }

 private:
  Mat m_;
};

/// Algebraic curvature tensor A_ijkl = A(e_i, e_j, e_k, e_l), stored as the
/// full 256-entry array. Instances always satisfy
/// A(x,y,z,v) = -A(y,x,z,v) = A(z,v,x,y) and the first Bianchi identity.
class CurvatureTensor {
 public:
  using Components = std::array<Scalar, 256>;

  /// The zero tensor.
  CurvatureTensor() = default;

  /// Validates the symmetries, then Bianchi. Throws SymmetryViolation or
  /// BianchiViolation naming the offending indices (1-based).
  static CurvatureTensor from_components(const Components& raw);

  static std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ((i * 4 + j) * 4 + k) * 4 + l;
  }

  /// 0-based indices.
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return c_[index(i, j, k, l)];
  }
  /// Component by its 1-based index string, e.g. "1221".
  const Scalar& at(std::string_view ijkl) const;

  const Components& components() const { return c_; }
  bool is_zero() const;

  /// Multilinear evaluation A(x, y, z, v).
  Scalar operator()(const Vec4& x, const Vec4& y, const Vec4& z, const Vec4& v) const;

  /// Components A(f_i, f_j, f_k, f_l) in another basis.
  CurvatureTensor in_frame(const std::array<Vec4, 4>& frame) const;

  CurvatureTensor& operator+=(const CurvatureTensor& o);
  CurvatureTensor& operator-=(const CurvatureTensor& o);
  CurvatureTensor& operator*=(const Scalar& s);
  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) { return a += b; }
  friend CurvatureTensor operator-(CurvatureTensor a, const CurvatureTensor& b) { return a -= b; }
  friend CurvatureTensor operator*(const Scalar& s, CurvatureTensor a) { return a *= s; }
  friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) { return a.c_ == b.c_; }

 private:
  explicit CurvatureTensor(const Components& c) : c_(c) {}
  template <class F>
  static CurvatureTensor tabulate(F&& f);
  friend CurvatureTensor build_A_Psi(const SkewAdjoint& psi);
  friend CurvatureTensor build_A0();

  Components c_;
};

/// A^Psi(x,y,z,v) = <Psi y,z><Psi x,v> - <Psi x,z><Psi y,v> - 2<Psi x,y><Psi z,v>.
CurvatureTensor build_A_Psi(const SkewAdjoint& psi);

/// A^0(x,y,z,v) = <y,z><x,v> - <x,z><y,v>, constant sectional curvature +1.
CurvatureTensor build_A0();

/// Skew-adjoint triple with Psi1^2 = -id, Psi2^2 = Psi3^2 = id, pairwise
/// anticommuting and Psi3 = Psi1 Psi2.
class ParaquaternionicTriple {
 public:
  /// Throws InvalidArgument if any relation fails.
  ParaquaternionicTriple(SkewAdjoint psi1, SkewAdjoint psi2, SkewAdjoint psi3);
  const SkewAdjoint& operator[](std::size_t i) const { return psi_.at(i); }

 private:
  std::array<SkewAdjoint, 3> psi_;
};

/// Psi1 e1 = -e2, Psi1 e2 = e1, Psi1 e3 = e4, Psi1 e4 = -e3;
/// Psi2 swaps e1 <-> e3 and e2 <-> e4; Psi3 = Psi1 Psi2.
const ParaquaternionicTriple& standard_paraquaternionic();

/// K(span{x,y}) = A(x,y,y,x) / (<x,x><y,y> - <x,y>^2). Throws DegeneratePlane.
Scalar sectional_curvature(const CurvatureTensor& a, const Vec4& x, const Vec4& y);

}  // namespace curv22

#endif  // CURV22_CURVATURE_HPP
