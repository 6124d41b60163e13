#ifndef CURV22_DUALITY_HPP
#define CURV22_DUALITY_HPP

#include <array>
#include <optional>

#include "curv22/curvature.hpp"

namespace curv22 {

struct RicciData {
  /// rho(e_a, e_b) = sum_i g^ii A(e_i, e_a, e_b, e_i)
  Mat ricci;
  Scalar tau;
  /// c with rho = c g, when it exists.
  std::optional<Scalar> einstein_constant;
};

RicciData ricci(const CurvatureTensor& a);
bool is_einstein(const CurvatureTensor& a);

/// Weyl tensor: A minus its Ricci and scalar trace parts.
CurvatureTensor weyl(const CurvatureTensor& a);

/// 2-form sum c_p e^i ^ e^j over the pairs 12, 13, 14, 23, 24, 34.
struct TwoForm {
  std::array<Scalar, 6> c;
  friend bool operator==(const TwoForm&, const TwoForm&) = default;
};

/// Index pairs (0-based) of the TwoForm coefficients.
const std::array<std::pair<std::size_t, std::size_t>, 6>& two_form_pairs();

TwoForm hodge_star(const TwoForm& w);
/// Induced inner product: <e^i^e^j, e^i^e^j> = g^ii g^jj.
Scalar inner(const TwoForm& a, const TwoForm& b);
/// Coefficient of e^1^e^2^e^3^e^4 in a ^ b.
Scalar wedge(const TwoForm& a, const TwoForm& b);

/// sqrt(2) E_1, sqrt(2) E_2, sqrt(2) E_3 spanning the +1 (epsilon = +1) or -1
/// eigenspace of the Hodge star: (e12 + eps e34), (e13 + eps e24), (e14 - eps e23).
/// Norms are +2, -2, -2.
std::array<TwoForm, 3> lambda_basis(int epsilon);

/// W restricted to the epsilon-eigenspace of the star, in the frame
/// {E_1, E_2, E_3} (metric (+,-,-)). Column j holds the coordinates of W E_j.
struct WeylOperatorMatrix {
  int epsilon;
  Mat matrix;
};

/// Closed form in the components of an Einstein tensor (trace-free parts enter
/// only through the diagonal sigma terms). Throws NotEinstein.
WeylOperatorMatrix weyl_operator(const CurvatureTensor& a, int epsilon);

/// The same matrix assembled directly: M_ij = <W(F_j), F_i> / <F_i, F_i> where
/// W(e^i^e^j) pairs with e^k^e^l through W(e_i, e_j, e_k, e_l). Works for any tensor.
Mat weyl_operator_direct(const CurvatureTensor& a, int epsilon);

enum class Duality { SelfDual, AntiSelfDual, Both, Neither };
const char* to_string(Duality d);

/// SelfDual iff W^- = 0, AntiSelfDual iff W^+ = 0, Both iff W = 0. Throws NotEinstein.
Duality duality_verdict(const CurvatureTensor& a);

/// A_1214 - A_1223 in the given frame. The frame must be orthonormal with
/// signature (-,-,+,+) in order and positively oriented; otherwise InvalidFrame.
Scalar frame_component_check(const CurvatureTensor& a, const std::array<Vec4, 4>& frame);

/// Data of J(u) on the totally null plane u = a e1 + b e2 + a e3 + b e4:
/// for Einstein A, char_poly J(u) = l^2 (l^2 - Q(a,b) E1).
struct NullPlaneDiagnostics {
  Scalar e1;
  /// Coefficients of a^4, a^3 b, a^2 b^2, a b^3, b^4.
  std::array<Scalar, 5> q;
};

NullPlaneDiagnostics null_plane_diagnostics(const CurvatureTensor& a);

}  // namespace curv22

#endif  // CURV22_DUALITY_HPP
