#ifndef CURV22_FAMILIES_HPP
#define CURV22_FAMILIES_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "curv22/curvature.hpp"

namespace curv22::family {

/// k0 A^0
struct Constant { Scalar k0; };
/// k0 A^0 + kJ A^J with J = Psi1
struct ComplexForm { Scalar k0, kJ; };
/// k0 A^0 + kP A^P with P = Psi2
struct Paracomplex { Scalar k0, kP; };
/// k1 A^Psi1 + k2 A^Psi2 + k3 A^Psi3
struct Paraquaternionic { Scalar k1, k2, k3; };
/// k0 A^0 + (1/3) sum_{i<=j} xi_ij A^{Psi_i + Psi_j} (A^{2 Psi_i} read as A^{Psi_i}).
struct Ansatz { Scalar k0, x11, x22, x33, x12, x13, x23; };
/// Diagonalizable table; alpha sits on the spacelike direction Psi1 e3.
struct TypeIa { Scalar alpha, beta, gamma; };
/// Complex eigenvalue pair a +- i b (b != 0) and real eigenvalue -c.
struct TypeIb { Scalar a, b, c; };
/// Double root of the minimal polynomial; sign is +1 or -1.
struct TypeII { Scalar alpha, beta; int sign = 1; };
/// Triple root of the minimal polynomial.
struct TypeIII { Scalar alpha; };
/// (k/4)(A^0 - A^P), the paracomplex space form of constant paraholomorphic curvature k.
struct ParacomplexSpaceForm { Scalar k; };

}  // namespace curv22::family

namespace curv22 {

using FamilySpec =
    std::variant<family::Constant, family::ComplexForm, family::Paracomplex, family::Paraquaternionic,
                 family::Ansatz, family::TypeIa, family::TypeIb, family::TypeII, family::TypeIII,
                 family::ParacomplexSpaceForm>;

/// Throws InvalidArgument for out-of-domain parameters (TypeIb b = 0, TypeII sign not +-1).
void validate(const FamilySpec& spec);

CurvatureTensor build_family(const FamilySpec& spec);

/// The 3x3 model matrix k0 id + [[x11+x12+x13, -x12, -x13], [x12, -x22-x12-x23, -x23],
/// [x13, -x23, -x33-x13-x23]].
Mat ansatz_matrix(const family::Ansatz& a);

/// CLI name, e.g. "paraquaternionic".
std::string family_name(const FamilySpec& spec);
/// Parameter names for a family, in canonical order. Throws InvalidArgument for an unknown name.
std::vector<std::string> family_param_names(std::string_view name);
/// (name, value) pairs in canonical order; TypeII's sign is "+1" or "-1".
std::vector<std::pair<std::string, std::string>> family_params(const FamilySpec& spec);
/// Inverse of family_name/family_params. Every parameter is required; unknown names, missing
/// or extra keys raise InvalidArgument, malformed values ParseError.
FamilySpec make_family(std::string_view name, const std::map<std::string, std::string>& params);

}  // namespace curv22

#endif  // CURV22_FAMILIES_HPP
