#ifndef CURV22_OSSERMAN_HPP
#define CURV22_OSSERMAN_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curv22/curvature.hpp"
#include "curv22/duality.hpp"
#include "curv22/jacobi.hpp"
#include "curv22/poly4.hpp"

namespace curv22 {

/// T_j(v) = Tr J(v)^j as a homogeneous polynomial of degree 2j in v1..v4.
Poly4 trace_power_poly(const CurvatureTensor& a, int j);

struct OssermanCertificate {
  bool holds = false;
  /// c_j = T_j at the reference unit vector (e3 spacelike, e1 timelike), j = 1..3.
  std::array<Scalar, 3> constants;
  /// First j with T_j != c_j <v,v>^j (spacelike) or c_j (-<v,v>)^j (timelike); 0 when holds.
  int failing_power = 0;
  Poly4 residual;
};

/// Eigenvalues of J constant on unit spacelike vectors, decided as the polynomial
/// identities T_j(v) = c_j <v,v>^j, j = 1..3.
OssermanCertificate spacelike_osserman(const CurvatureTensor& a);
/// Same on unit timelike vectors: T_j(v) = c_j (-<v,v>)^j.
OssermanCertificate timelike_osserman(const CurvatureTensor& a);

struct NullOssermanCertificate {
  bool holds = false;
  /// k such that the coefficient of l^(4-k) in det(l I - J(v)) is not divisible by the
  /// neutral quadric; 0 when holds.
  int failing_coefficient = 0;
  Poly4 remainder;
};

/// J(v) nilpotent for every null v: each char-poly coefficient of the symbolic
/// J(v) vanishes modulo <v,v>.
NullOssermanCertificate null_osserman(const CurvatureTensor& a);

/// The four equivalent Osserman conditions, each computed independently.
struct OssermanReport {
  OssermanCertificate spacelike;
  OssermanCertificate timelike;
  bool einstein = false;
  std::optional<Duality> duality;  // set when Einstein
  bool einstein_and_half_flat = false;
  NullOssermanCertificate null;
  bool agreement = false;
  bool osserman() const { return spacelike.holds; }
};

OssermanReport osserman_report(const CurvatureTensor& a);

/// Null direction v = cos(th) e1 + sin(th) e2 + cos(ph) e3 + sin(ph) e4 with
/// cos = (1 - t^2)/(1 + t^2), sin = 2t/(1 + t^2); a flip negates cos and sin
/// (the antipodal chart), so every null ray is reached.
struct NullDirection {
  Rational t, u;
  bool flip_theta = false;
  bool flip_phi = false;
  Vec4 vector() const;
  std::string label() const;
};

/// 17 x 17 half-angle grid t, u in {k/8 : |k| <= 8} in coarse-to-fine order
/// (0, 1, -1, 1/2, -1/2, ...), followed by `random_points` seeded random
/// directions with random charts.
std::vector<NullDirection> default_null_grid(std::uint64_t seed = 0, int random_points = 64, int denominator = 8);

struct SurveyConstant {
  RankProfile profile;
  std::size_t points;
};
struct RankWitness {
  NullDirection first, second;
  RankProfile first_profile, second_profile;
};
using SurveyResult = std::variant<SurveyConstant, RankWitness>;

/// Rank profiles of J(v) over the grid; the first direction whose profile
/// differs from the first grid point forms the witness. Throws
/// NotNullOsserman when A is not null Osserman, InvalidArgument for an empty grid.
SurveyResult null_jordan_rank_survey(const CurvatureTensor& a, const std::vector<NullDirection>& grid);

/// det of the block of J(v) on span{e3, e4} (projected to span{e3, e4}). When
/// J(v)^2 = 0 this is nonzero exactly when rank J(v) = 2.
Scalar rank_drop_determinant(const CurvatureTensor& a, const Vec4& v);

/// Two null directions where rank_drop_determinant has opposite signs, so the
/// rank of J must drop in between.
struct SignChangeWitness {
  NullDirection positive, negative;
  Scalar positive_value, negative_value;
};
std::optional<SignChangeWitness> find_sign_change(const CurvatureTensor& a, const std::vector<NullDirection>& grid);

enum class VerdictKind { ConstantCurvature = 1, ComplexForm = 2, Paracomplex = 3, Paraquaternionic = 4, NotNJO = 0 };
enum class NotNJOReason { None, NotOsserman, WrongType, IneqFails, MixedEigenspace };
const char* to_string(VerdictKind k);
const char* to_string(NotNJOReason r);

/// A recovered parameter: exact, or an isolating interval when irrational.
struct Parameter {
  std::string name;
  std::optional<Scalar> exact;
  Rational lo, hi;
};

/// Rank witness at two explicit vectors (e.g. e2 - e3 and e2 + e3).
struct VectorWitness {
  std::string first_label, second_label;
  Vec4 first, second;
  RankProfile first_profile, second_profile;
};

struct ClassificationVerdict {
  VerdictKind kind = VerdictKind::NotNJO;
  NotNJOReason reason = NotNJOReason::None;
  std::vector<Parameter> params;
  /// k2 k3 (k2 + k1)(k3 + k1) when the spectrum is three distinct real roots; sign always set.
  std::optional<Scalar> inequality;
  int inequality_sign = 0;
  /// k3 (k2 + k1) / (k2 (k3 + k1)) when defined and exact.
  std::optional<Scalar> cross_ratio;

  OssermanReport osserman;
  std::optional<JordanReport> jordan;
  std::optional<SurveyResult> survey;
  std::vector<VectorWitness> vector_witnesses;
  std::optional<RankWitness> rank_witness;
  std::optional<SignChangeWitness> sign_change;

  bool is_family() const { return kind != VerdictKind::NotNJO; }
};

struct ClassifyOptions {
  std::uint64_t grid_seed = 0;
  int random_points = 64;
  int grid_denominator = 8;
};

/// Decides null Jordan Osserman and the family. Families are cross-checked against the
/// rank survey; a disagreement throws InternalError.
ClassificationVerdict classify_null_jordan(const CurvatureTensor& a, const ClassifyOptions& opt = {});

/// Matrices of pi_+ J(v) on span{e, Psi1 e} for v = e + c Psi2 e + s Psi3 e, as
/// polynomials in c = v1, s = v2.
struct CoefficientMatrixFamily {
  struct Paraquaternionic { Scalar k1, k2, k3; };
  struct TypeIb { Scalar a, b, c; };
  std::variant<Paraquaternionic, TypeIb> params;
};

Matrix<Poly4> coefficient_matrix(const CoefficientMatrixFamily& f);
/// det of coefficient_matrix reduced modulo c^2 + s^2 - 1.
Poly4 coefficient_matrix_det(const CoefficientMatrixFamily& f);
/// 9[(k1 + k3) k2 c^2 + (k1 + k2) k3 s^2], reduced modulo the circle.
Poly4 paraquaternionic_det_closed_form(const Scalar& k1, const Scalar& k2, const Scalar& k3);
/// Value at a rational point of the circle; throws InvalidArgument off the circle.
Scalar eval_on_circle(const Poly4& p, const Scalar& c, const Scalar& s);
/// True iff the polynomial p(c, s) has no zero on the circle c^2 + s^2 = 1.
bool nonvanishing_on_circle(const Poly4& p);

/// k3 (k2 + k1) / (k2 (k3 + k1)) > 0. Throws DenominatorZero.
bool cross_ratio_predicate(const Scalar& k1, const Scalar& k2, const Scalar& k3);
Scalar cross_ratio(const Scalar& k1, const Scalar& k2, const Scalar& k3);
Scalar paraquaternionic_quartic(const Scalar& k1, const Scalar& k2, const Scalar& k3);

}  // namespace curv22

#endif  // CURV22_OSSERMAN_HPP
