#ifndef CURV22_ROOTS_HPP
#define CURV22_ROOTS_HPP

#include <optional>
#include <vector>

#include "curv22/poly1.hpp"
#include "curv22/scalar.hpp"

namespace curv22 {

/// Sturm sequence p, p', -rem(p, p'), ... of a nonzero polynomial.
std::vector<Poly1> sturm_sequence(const Poly1& p);

/// Sign variations of the sequence at x (zeros skipped).
int sign_variations(const std::vector<Poly1>& seq, const Scalar& x);

/// Distinct real roots of the squarefree polynomial behind `seq` in (lo, hi].
int sturm_count(const std::vector<Poly1>& seq, const Rational& lo, const Rational& hi);

/// Distinct real roots over the whole real line.
int sturm_count_all(const std::vector<Poly1>& seq);

/// Rational B with every real root of p in (-B, B).
Rational root_bound(const Poly1& p);

struct RealRoot {
  /// Isolating interval (lo, hi]; contains this root and no other root.
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  /// Set when the root lies in Q(sqrt 2).
  std::optional<Scalar> exact;
};

/// Real roots of a polynomial, each isolated in a rational interval.
class RootIsolation {
 public:
  RootIsolation() = default;
  RootIsolation(Poly1 squarefree, std::vector<RealRoot> roots);

  const Poly1& squarefree_part() const { return squarefree_; }
  const std::vector<RealRoot>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  const RealRoot& operator[](std::size_t i) const { return roots_[i]; }

  /// Narrows root i's interval below the given width (exact roots collapse
  /// to lo == hi).
  void refine(std::size_t i, const Rational& width);

  /// Sign of q at root i, refining as needed. Exact when q vanishes there.
  int sign_at(std::size_t i, const Poly1& q);

  /// Approximate value of root i for display.
  double approx(std::size_t i) const;

 private:
  friend RootIsolation isolate_real_roots(const Poly1& p);
  void recognize_exact();

  Poly1 squarefree_;
  std::vector<Poly1> sturm_;
  std::vector<RealRoot> roots_;
};

/// Sturm isolation of the real roots of p (nonzero), with multiplicities and
/// exact recognition of roots lying in Q(sqrt 2). Roots are sorted ascending.
RootIsolation isolate_real_roots(const Poly1& p);

/// Number of distinct real roots of p (nonzero).
int count_real_roots(const Poly1& p);

}  // namespace curv22

#endif  // CURV22_ROOTS_HPP
