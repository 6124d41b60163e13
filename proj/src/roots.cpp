#include "curv22/roots.hpp"

#include <algorithm>
#include <utility>

#include "curv22/errors.hpp"

namespace curv22 {

std::vector<Poly1> sturm_sequence(const Poly1& p) {
  if (p.is_zero()) throw InvalidArgument("sturm_sequence: zero polynomial");
  std::vector<Poly1> seq{p};
  Poly1 next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    const std::size_t k = seq.size();
    Poly1 r = -(seq[k - 2] % seq[k - 1]);
    // Positive rescaling keeps signs and tames coefficient growth.
    if (!r.is_zero()) r = r * r.leading().abs().inverse();
    next = std::move(r);
  }
  return seq;
}

int sign_variations(const std::vector<Poly1>& seq, const Scalar& x) {
  int prev = 0;
  int count = 0;
  for (const auto& q : seq) {
    const int s = q.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int sturm_count(const std::vector<Poly1>& seq, const Rational& lo, const Rational& hi) {
  return sign_variations(seq, Scalar(lo)) - sign_variations(seq, Scalar(hi));
}

namespace {

// Sign variations at +infinity / -infinity from leading coefficients.
int variations_at_infinity(const std::vector<Poly1>& seq, bool positive) {
  int prev = 0;
  int count = 0;
  for (const auto& q : seq) {
    int s = q.leading().sign();
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_count_all(const std::vector<Poly1>& seq) {
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

Rational root_bound(const Poly1& p) {
  if (p.is_zero()) throw InvalidArgument("root_bound: zero polynomial");
  const Scalar inv = p.leading().inverse();
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, (p.coeff(k) * inv).abs_upper_bound());
  return m + 1;
}

int count_real_roots(const Poly1& p) {
  const auto sf = squarefree_data(p).squarefree_part;
  if (sf.degree() <= 0) return 0;
  return sturm_count_all(sturm_sequence(sf));
}

RootIsolation::RootIsolation(Poly1 squarefree, std::vector<RealRoot> roots)
    : squarefree_(std::move(squarefree)), roots_(std::move(roots)) {
  if (squarefree_.degree() > 0) sturm_ = sturm_sequence(squarefree_);
}

void RootIsolation::refine(std::size_t i, const Rational& width) {
  RealRoot& r = roots_.at(i);
  if (r.exact && r.exact->is_rational()) {
    r.lo = r.hi = r.exact->rat();
    return;
  }
  while (r.hi - r.lo >= width) {
    Rational mid = (r.lo + r.hi) / 2;
    if (squarefree_.eval(Scalar(mid)).is_zero()) {
      r.lo = r.hi = mid;
      r.exact = Scalar(mid);
      return;
    }
    if (sturm_count(sturm_, r.lo, mid) == 1) {
      r.hi = mid;
    } else {
      r.lo = mid;
    }
  }
}

int RootIsolation::sign_at(std::size_t i, const Poly1& q) {
  RealRoot& r = roots_.at(i);
  if (q.is_zero()) return 0;
  if (r.exact) return q.eval(*r.exact).sign();
  if (q.degree() == 0) return q.leading().sign();
  // q vanishes at the root iff gcd(squarefree, q) has a root in the interval.
  const Poly1 g = gcd(squarefree_, q);
  if (g.degree() > 0 && sturm_count(sturm_sequence(g), r.lo, r.hi) > 0) return 0;
  const auto qseq = sturm_sequence(squarefree_data(q).squarefree_part);
  Rational width = (r.hi - r.lo) / 2;
  while (sturm_count(qseq, r.lo, r.hi) > 0) {
    refine(i, width);
    if (r.exact) return q.eval(*r.exact).sign();
    width /= 2;
  }
  return q.eval(Scalar(r.hi)).sign();
}

double RootIsolation::approx(std::size_t i) const {
  const RealRoot& r = roots_.at(i);
  if (r.exact) return r.exact->to_double();
  return Rational((r.lo + r.hi) / 2).get_d();
}

namespace {

using Interval = std::pair<Rational, Rational>;

std::vector<Interval> isolate_squarefree(const Poly1& sf, const std::vector<Poly1>& seq) {
  std::vector<Interval> out;
  if (sf.degree() <= 0) return out;
  const Rational b = root_bound(sf);
  std::vector<std::pair<Interval, int>> stack;
  const int total = sturm_count(seq, -b, b);
  if (total > 0) stack.push_back({{-b, b}, total});
  while (!stack.empty()) {
    auto [iv, n] = stack.back();
    stack.pop_back();
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.first + iv.second) / 2;
    const int left = sturm_count(seq, iv.first, mid);
    if (left > 0) stack.push_back({{iv.first, mid}, left});
    if (n - left > 0) stack.push_back({{mid, iv.second}, n - left});
  }
  std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.first < y.first; });
  return out;
}

// Primitive integer polynomial proportional to a rational-coefficient p.
std::vector<mpz_class> primitive_integer(const Poly1& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rat().get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.rat().get_num() * (l / c.rat().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  out = Rational(mpz_class(sqrt(n)), mpz_class(sqrt(d)));
  out.canonicalize();
  return true;
}

// Smallest interval [lo,hi] with lo <= x <= hi for x in (a.lo,a.hi] + (b.lo,b.hi] etc.
Interval add_iv(const Interval& a, const Interval& b) { return {a.first + b.first, a.second + b.second}; }

Interval mul_iv(const Interval& a, const Interval& b) {
  const Rational c[4] = {a.first * b.first, a.first * b.second, a.second * b.first, a.second * b.second};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

// Unique k/den in [lo,hi] when hi - lo < 1/den, if any.
std::optional<Rational> grid_point(const Interval& iv, const mpz_class& den) {
  Rational scaled = iv.second * Rational(den);
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational cand(k, den);
  cand.canonicalize();
  if (cand < iv.first) return std::nullopt;
  return cand;
}

bool in_interval(const Scalar& x, const RealRoot& r) {
  return Scalar(r.lo) < x && x <= Scalar(r.hi);
}

// Finds the roots of sf that lie in Q(sqrt 2). Every such root r = a + b*sqrt2
// is a root of the rational norm polynomial N = sf * conj(sf), whose minimal
// polynomial over Q is (x - a) or x^2 - 2a x + (a^2 - 2b^2). Candidates are
// pinned down from refined isolating intervals of N's real roots and then
// verified exactly.
}  // namespace

void RootIsolation::recognize_exact() {
  RootIsolation& iso = *this;
  const Poly1& sf = squarefree_;
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < iso.size(); ++i) {
    if (!iso[i].exact) pending.push_back(i);
  }
  if (pending.empty()) return;
  const Poly1 norm_sf = squarefree_data(sf * sf.conj()).squarefree_part;
  const auto ints = primitive_integer(norm_sf);
  mpz_class den = abs(ints.back());
  RootIsolation nroots(norm_sf, {});
  {
    const auto seq = sturm_sequence(norm_sf);
    std::vector<RealRoot> rr;
    for (auto& [lo, hi] : isolate_squarefree(norm_sf, seq)) rr.push_back({lo, hi, 1, std::nullopt});
    nroots = RootIsolation(norm_sf, std::move(rr));
  }
  const Rational grid(1, den);
  const Rational width(1, den * 4);
  for (std::size_t k = 0; k < nroots.size(); ++k) nroots.refine(k, width);

  std::vector<Scalar> candidates;
  for (std::size_t k = 0; k < nroots.size(); ++k) {
    const auto& r = nroots[k];
    if (r.exact) {
      candidates.push_back(*r.exact);
      continue;
    }
    if (auto c = grid_point({r.lo, r.hi}, den)) candidates.push_back(Scalar(*c));
  }
  for (std::size_t i = 0; i < nroots.size(); ++i) {
    for (std::size_t j = i + 1; j < nroots.size(); ++j) {
      Rational w = width;
      Interval a{nroots[i].lo, nroots[i].hi};
      Interval b{nroots[j].lo, nroots[j].hi};
      for (;;) {
        const Interval pr = mul_iv(a, b);
        if (pr.second - pr.first < grid) break;
        w /= 2;
        nroots.refine(i, w);
        nroots.refine(j, w);
        a = {nroots[i].lo, nroots[i].hi};
        b = {nroots[j].lo, nroots[j].hi};
      }
      auto sum = grid_point(add_iv(a, b), den);
      auto prod = grid_point(mul_iv(a, b), den);
      if (!sum || !prod) continue;
      const Rational half = *sum / 2;
      Rational b2 = (half * half - *prod) / 2;
      Rational bq;
      if (sgn(b2) <= 0 || !rational_sqrt(b2, bq)) continue;
      candidates.emplace_back(half, bq);
      candidates.emplace_back(half, -bq);
    }
  }
  for (std::size_t i : pending) {
    for (const auto& c : candidates) {
      if (in_interval(c, iso[i]) && sf.eval(c).is_zero()) {
        roots_[i].exact = c;
        break;
      }
    }
  }
}

RootIsolation isolate_real_roots(const Poly1& p) {
  const SquarefreeData sq = squarefree_data(p);
  const Poly1& sf = sq.squarefree_part;
  if (sf.degree() <= 0) return RootIsolation(sf, {});
  const auto seq = sturm_sequence(sf);
  std::vector<RealRoot> roots;
  for (auto& [lo, hi] : isolate_squarefree(sf, seq)) {
    RealRoot r{lo, hi, 1, std::nullopt};
    if (sf.eval(Scalar(hi)).is_zero()) r.exact = Scalar(hi);
    for (std::size_t m = 0; m < sq.by_multiplicity.size(); ++m) {
      const Poly1& f = sq.by_multiplicity[m];
      if (f.degree() <= 0) continue;
      if (sturm_count(sturm_sequence(f), lo, hi) == 1) {
        r.multiplicity = static_cast<int>(m) + 1;
        break;
      }
    }
    roots.push_back(std::move(r));
  }
  RootIsolation iso(sf, std::move(roots));
  iso.recognize_exact();
  return iso;
}

}  // namespace curv22
