#ifndef CURV22_RANDOM_HPP
#define CURV22_RANDOM_HPP

#include <cstdint>
#include <random>

#include "curv22/curvature.hpp"
#include "curv22/families.hpp"
#include "curv22/scalar.hpp"

namespace curv22 {

/// Seeded source of small exact rationals. Numerators satisfy |p| <= bound
/// and denominators 1 <= q <= bound, so exact arithmetic stays cheap.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long bound = 32) : rng_(seed), bound_(bound) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational() {
    Rational q(integer(-bound_, bound_), integer(1, bound_));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational() {
    for (;;) {
      Rational q = rational();
      if (sgn(q) != 0) return q;
    }
  }
  Scalar scalar() { return Scalar(rational()); }
  Scalar nonzero() { return Scalar(nonzero_rational()); }
  /// Element with a nonzero sqrt(2) part about half of the time.
  Scalar surd_scalar() { return coin() ? Scalar(rational(), rational()) : Scalar(rational()); }

  std::mt19937_64& engine() { return rng_; }
  long bound() const { return bound_; }

 private:
  std::mt19937_64 rng_;
  long bound_;
};

/// Rational point (c, s) on c^2 + s^2 = 1, via c = (1-t^2)/(1+t^2), s = 2t/(1+t^2).
std::pair<Scalar, Scalar> random_circle_point(RationalSampler& rs);
/// Rational (c, s) with c^2 - s^2 = 1 and c > 0: c = (1+t^2)/(1-t^2), s = 2t/(1-t^2), |t| < 1.
std::pair<Scalar, Scalar> random_hyperbolic_pair(RationalSampler& rs);

/// Product of random rational rotations in the e1e2 and e3e4 planes and
/// boosts mixing a timelike with a spacelike axis. Columns form an
/// orthonormal frame of signature (-,-,+,+); orientation is preserved.
Mat random_isometry(RationalSampler& rs, int factors = 4);

/// Rational vector with <x,x> = +1 (spacelike) or -1.
Vec4 random_unit_vector(RationalSampler& rs, bool spacelike);
/// Nonzero rational null vector.
Vec4 random_null_vector(RationalSampler& rs);
Vec4 random_vector(RationalSampler& rs);

SkewAdjoint random_skew(RationalSampler& rs);
/// sum of random multiples of A^Psi for random skew Psi plus a multiple of A^0;
/// these span all algebraic curvature tensors.
CurvatureTensor random_curvature_tensor(RationalSampler& rs, int terms = 4);

family::Ansatz random_ansatz(RationalSampler& rs);

/// Columns of random_isometry as a frame.
std::array<Vec4, 4> random_frame(RationalSampler& rs, int factors = 4);

/// weyl(random) + c A^0: Einstein with a generic Weyl part.
CurvatureTensor random_einstein(RationalSampler& rs);
/// Ansatz tensor in a random oriented orthonormal frame; W^- = 0.
CurvatureTensor random_self_dual_einstein(RationalSampler& rs);
/// Ansatz tensor seen through the orientation-reversing swap e3 <-> e4; W^+ = 0.
CurvatureTensor random_anti_self_dual_einstein(RationalSampler& rs);
/// a plus a nonzero multiple of the tensor supported on the orbit of A_ijji
/// for a random pair i != j. The Ricci tensor changes on e_i and e_j only, so
/// the result is never Einstein when a is.
CurvatureTensor perturb_non_einstein(RationalSampler& rs, const CurvatureTensor& a);

}  // namespace curv22

#endif  // CURV22_RANDOM_HPP
