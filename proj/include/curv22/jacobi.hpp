#ifndef CURV22_JACOBI_HPP
#define CURV22_JACOBI_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curv22/curvature.hpp"
#include "curv22/poly4.hpp"
#include "curv22/roots.hpp"

namespace curv22 {

/// y -> A(y,x)x, determined by <J(x)y, z> = A(y,x,x,z). Column j of `matrix` is J(x)e_j.
struct JacobiOperator {
  Vec4 x;
  Mat matrix;
};

JacobiOperator jacobi(const CurvatureTensor& a, const Vec4& x);

/// J(x) with polynomial coordinates; entries are quadratic forms in x.
Matrix<Poly4> symbolic_jacobi(const CurvatureTensor& a, const std::array<Poly4, 4>& x);
/// symbolic_jacobi at the generic vector (v1, v2, v3, v4).
Matrix<Poly4> symbolic_jacobi(const CurvatureTensor& a);

/// J(x) on x^perp in the frame f_k = Psi_k x (k = 1..3) of the standard
/// paraquaternionic triple. frame_signs = <f_k,f_k>: (+,-,-) for unit
/// spacelike x, (-,+,+) for unit timelike x. Column j holds the frame
/// coordinates of J f_j.
struct RestrictedOperator {
  Vec4 x;
  std::array<Vec4, 3> frame;
  std::array<int, 3> frame_signs;
  Mat matrix;
};

/// Throws NonUnitVector unless <x,x> = +1 or -1.
RestrictedOperator restrict_jacobi(const CurvatureTensor& a, const Vec4& x);

enum class JordanType { Ia, Ib, II, III };
const char* to_string(JordanType t);

/// Causal character of an eigenspace of a diagonalizable restricted operator.
enum class EigenspaceCausal { Spacelike, Timelike, Mixed, Unknown };
const char* to_string(EigenspaceCausal c);

struct Eigenvalue {
  /// Isolating interval; lo == hi == value when exact.
  Rational lo, hi;
  std::optional<Scalar> exact;
  int multiplicity = 1;
  /// Eigenspace data, filled for Type Ia only.
  EigenspaceCausal causal = EigenspaceCausal::Unknown;
  /// Exact eigenspace basis in frame coordinates, when the root is exact.
  std::vector<std::vector<Scalar>> eigenspace;
};

struct JordanReport {
  JordanType type;
  Poly1 char_poly;
  /// Minimal polynomial, monic.
  Poly1 min_poly;
  /// Distinct real roots, ascending.
  std::vector<Eigenvalue> roots;
  /// Isolation of char_poly's real roots; roots[i] corresponds to isolation[i].
  RootIsolation isolation;
  std::array<int, 3> frame_signs{};
};

/// Exact Jordan type of a 3x3 operator self-adjoint for diag(frame_signs):
/// Ib when char_poly has a non-real pair, otherwise Ia / II / III when the
/// minimal polynomial is s, s^2 or s^3 for the squarefree part s of char_poly.
JordanReport jordan_classify(const Mat& m, const std::array<int, 3>& frame_signs);
JordanReport jordan_classify(const RestrictedOperator& op);

/// Sign of <w,w> for an eigenvector w of the simple root `index` of a Type Ia
/// report: +1 spacelike, -1 timelike. Decided exactly, refining the isolating
/// interval when the root is irrational.
int simple_eigenvector_sign(const Mat& m, const std::array<int, 3>& frame_signs, RootIsolation& iso,
                            std::size_t index);

struct RankProfile {
  std::size_t r1 = 0;  // rank J(v)
  std::size_t r2 = 0;  // rank J(v)^2
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/// Throws ZeroVector for v = 0 and NotNull for <v,v> != 0.
RankProfile null_rank_profile(const CurvatureTensor& a, const Vec4& v);

}  // namespace curv22

#endif  // CURV22_JACOBI_HPP
