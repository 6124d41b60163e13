#include "curv22/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "curv22/duality.hpp"
#include "curv22/errors.hpp"
#include "curv22/random.hpp"

namespace curv22 {

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}
  void check(const std::string& property, bool ok, const std::string& detail = {}) {
    PropertyResult& p = find(property);
    ++p.total;
    if (ok) ++p.passed;
    else if (p.note.empty()) p.note = detail.empty() ? "trial " + std::to_string(p.total) : detail;
  }

 private:
  PropertyResult& find(const std::string& name) {
    for (auto& p : r_.properties)
      if (p.name == name) return p;
    PropertyResult p;
    p.name = name;
    r_.properties.push_back(std::move(p));
    return r_.properties.back();
  }
  SuiteReport& r_;
};

using SuiteFn = std::function<void(Recorder&, RationalSampler&, int)>;

const Vec4 e1 = basis_vector(0), e2 = basis_vector(1), e3 = basis_vector(2), e4 = basis_vector(3);

bool params_equal(const ClassificationVerdict& v, const std::vector<Scalar>& expect) {
  if (v.params.size() != expect.size()) return false;
  for (std::size_t i = 0; i < expect.size(); ++i)
    if (!v.params[i].exact || *v.params[i].exact != expect[i]) return false;
  return true;
}

bool survey_constant(const ClassificationVerdict& v) {
  return v.survey && std::holds_alternative<SurveyConstant>(*v.survey) &&
         std::get<SurveyConstant>(*v.survey).points >= 289;
}

std::string triple(const Scalar& a, const Scalar& b, const Scalar& c) {
  return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

void osserman_equivalence(Recorder& rec, RationalSampler& rs, int n) {
  for (int t = 0; t < n; ++t) {
    const CurvatureTensor a = build_family(random_ansatz(rs));
    const OssermanReport r = osserman_report(a);
    rec.check("ansatz: spacelike Osserman identity", r.spacelike.holds);
    rec.check("ansatz: timelike Osserman identity", r.timelike.holds);
    rec.check("ansatz: Einstein and self-dual", r.einstein_and_half_flat);
    rec.check("ansatz: null Osserman by quadric divisibility", r.null.holds);
    rec.check("agreement", r.agreement);
  }
  for (int t = 0; t < n; ++t) {
    const CurvatureTensor a = perturb_non_einstein(rs, build_family(random_ansatz(rs)));
    const OssermanReport r = osserman_report(a);
    rec.check("perturbation: not Einstein", !r.einstein);
    rec.check("perturbation: spacelike Osserman fails", !r.spacelike.holds);
    rec.check("perturbation: timelike Osserman fails", !r.timelike.holds);
    rec.check("perturbation: Einstein and half-flat fails", !r.einstein_and_half_flat);
    rec.check("perturbation: null Osserman fails", !r.null.holds);
    rec.check("agreement", r.agreement);
  }
}

void classification_positives(Recorder& rec, RationalSampler& rs, int n) {
  using namespace family;
  auto expect = [&](const std::string& prop, const FamilySpec& spec, VerdictKind kind, std::vector<Scalar> params) {
    const ClassificationVerdict v = classify_null_jordan(build_family(spec));
    rec.check(prop + ": verdict", v.kind == kind && params_equal(v, params),
              family_to_json(spec).dump() + " -> " + verdict_json(v).dump());
    rec.check(prop + ": survey constant", survey_constant(v), family_to_json(spec).dump());
  };
  const int small = std::max(1, n / 10);
  for (int t = 0; t < small; ++t) {
    const Scalar k0 = t == 0 ? Scalar(0) : rs.scalar();
    expect("constant curvature", Constant{k0}, VerdictKind::ConstantCurvature, {k0});
    const Scalar c0 = t == 0 ? Scalar(0) : rs.surd_scalar(), kj = rs.nonzero();
    expect("complex form", ComplexForm{c0, kj}, VerdictKind::ComplexForm, {c0, kj});
    const Scalar kp = rs.nonzero();
    expect("paracomplex with k0 = 0", Paracomplex{0, kp}, VerdictKind::Paracomplex, {kp});
  }
  for (int t = 0; t < n; ++t) {
    Scalar k1, k2, k3;
    do {
      k1 = rs.scalar();
      k2 = rs.scalar();
      k3 = rs.scalar();
    } while (paraquaternionic_quartic(k1, k2, k3).sign() <= 0 || k2 == k3);
    expect("paraquaternionic", Paraquaternionic{k1, k2, k3}, VerdictKind::Paraquaternionic, {k1, k2, k3});
  }
}

void classification_negatives(Recorder& rec, RationalSampler& rs, int n) {
  using namespace family;
  const Vec4 u = e2 - e3, v = e2 + e3;
  const Vec4 psi2e1 = e1 + standard_paraquaternionic()[1](e1);
  for (int t = 0; t < n; ++t) {
    const CurvatureTensor pc = build_family(Paracomplex{rs.nonzero(), rs.nonzero()});
    rec.check("paracomplex: rank <= 1 at e1 + Psi2 e1", null_rank_profile(pc, psi2e1).r1 <= 1);
    rec.check("paracomplex: rank 2 at e1 + e4", null_rank_profile(pc, e1 + e4).r1 == 2);
    rec.check("paracomplex: not null Jordan Osserman", !classify_null_jordan(pc).is_family());

    const int sign = rs.coin() ? 1 : -1;
    const CurvatureTensor ii0 = build_family(TypeII{rs.scalar(), 0, sign});
    rec.check("type II, beta = 0: (r(u), r(v)) = (0, 1)",
              null_rank_profile(ii0, u).r1 == 0 && null_rank_profile(ii0, v).r1 == 1);
    const CurvatureTensor ii = build_family(TypeII{rs.scalar(), rs.nonzero(), sign});
    rec.check("type II, beta != 0: (r(u), r(v)) = (1, 2)",
              null_rank_profile(ii, u).r1 == 1 && null_rank_profile(ii, v).r1 == 2);
    const CurvatureTensor iii = build_family(TypeIII{rs.scalar()});
    rec.check("type III: r(u) = 2, r(v) <= 1", null_rank_profile(iii, u).r1 == 2 && null_rank_profile(iii, v).r1 <= 1);

    for (const CurvatureTensor* a : {&ii0, &ii, &iii}) {
      const ClassificationVerdict c = classify_null_jordan(*a);
      rec.check("types II/III: wrong type with e2 -/+ e3 witnesses",
                c.reason == NotNJOReason::WrongType && c.vector_witnesses.size() == 1);
    }
    const ClassificationVerdict ib = classify_null_jordan(build_family(TypeIb{rs.scalar(), rs.nonzero(), rs.nonzero()}));
    rec.check("type Ib: wrong type with a determinant sign change",
              ib.reason == NotNJOReason::WrongType && ib.sign_change.has_value());

    Scalar k1, k2, k3;
    do {
      k1 = rs.scalar();
      k2 = rs.scalar();
      k3 = rs.scalar();
    } while (paraquaternionic_quartic(k1, k2, k3).sign() >= 0 || k2 == k3 || k1 == -k2 || k1 == -k3);
    const ClassificationVerdict pq = classify_null_jordan(build_family(Paraquaternionic{k1, k2, k3}));
    rec.check("paraquaternionic, inequality fails: witness attached",
              pq.reason == NotNJOReason::IneqFails && (pq.rank_witness || pq.sign_change), triple(k1, k2, k3));
  }
}

void paraquaternionic_determinant(Recorder& rec, RationalSampler& rs, int n) {
  std::vector<std::pair<Scalar, Scalar>> circle;
  for (const NullDirection& d : default_null_grid(0, 0, 8))
    if (d.u == 0)
      for (bool flip : {false, true}) {
        const Vec4 x = NullDirection{d.t, 0, flip, false}.vector();
        circle.emplace_back(x[0], x[1]);
      }
  for (int t = 0; t < n; ++t) {
    const Scalar k1 = rs.surd_scalar(), k2 = rs.scalar(), k3 = rs.scalar();
    rec.check("determinant identity modulo the circle",
              coefficient_matrix_det({CoefficientMatrixFamily::Paraquaternionic{k1, k2, k3}}) ==
                  paraquaternionic_det_closed_form(k1, k2, k3),
              triple(k1, k2, k3));
  }
  const int total = 5 * n, boundary = total / 10;
  for (int t = 0; t < total; ++t) {
    Scalar k1 = rs.scalar(), k2 = rs.scalar(), k3 = rs.scalar();
    if (t < boundary) {
      switch (t % 4) {
        case 0: k2 = 0; break;
        case 1: k3 = 0; break;
        case 2: k2 = -k1; break;
        default: k3 = -k1; break;
      }
    }
    const Poly4 det = coefficient_matrix_det({CoefficientMatrixFamily::Paraquaternionic{k1, k2, k3}});
    const int q = paraquaternionic_quartic(k1, k2, k3).sign();
    rec.check("non-vanishing on the circle iff the inequality holds", nonvanishing_on_circle(det) == (q > 0),
              triple(k1, k2, k3));
    bool grid_zero = false;
    for (const auto& [c, s] : circle) grid_zero = grid_zero || eval_on_circle(det, c, s).is_zero();
    if (q == 0) rec.check("boundary: determinant vanishes on the grid", grid_zero, triple(k1, k2, k3));
    if (q > 0) rec.check("inequality: no grid zero", !grid_zero, triple(k1, k2, k3));
  }
}

void type_ib_determinant(Recorder& rec, RationalSampler& rs, int n) {
  for (int t = 0; t < n; ++t) {
    const Scalar a = rs.scalar(), b = rs.nonzero(), c = rs.scalar();
    const Poly4 det = coefficient_matrix_det({CoefficientMatrixFamily::TypeIb{a, b, c}});
    rec.check("det at (0, 1) = -2bc", eval_on_circle(det, 0, 1) == Scalar(-2) * b * c, triple(a, b, c));
    rec.check("det at (0, -1) = 2bc", eval_on_circle(det, 0, -1) == Scalar(2) * b * c, triple(a, b, c));
    const Poly4 det0 = coefficient_matrix_det({CoefficientMatrixFamily::TypeIb{a, b, 0}});
    rec.check("c = 0: det at (1, 0) = -a^2 - b^2", eval_on_circle(det0, 1, 0) == -a * a - b * b, triple(a, b, 0));
  }
}

void weyl_operator_suite(Recorder& rec, RationalSampler& rs, int n) {
  for (int t = 0; t < n; ++t) {
    const CurvatureTensor a = random_einstein(rs);
    for (int eps : {1, -1})
      rec.check(eps > 0 ? "closed form = direct assembly on Lambda+" : "closed form = direct assembly on Lambda-",
                weyl_operator(a, eps).matrix == weyl_operator_direct(a, eps));
  }
  rec.check("ansatz tensors are self-dual", duality_verdict(build_family(random_ansatz(rs))) != Duality::AntiSelfDual);
}

void frame_orbit(Recorder& rec, RationalSampler& rs, int n) {
  for (int t = 0; t < n; ++t) {
    const CurvatureTensor a = random_anti_self_dual_einstein(rs);
    rec.check("anti-self-dual", weyl_operator(a, 1).matrix.is_zero());
    rec.check("standard frame", frame_component_check(a, {e1, e2, e3, e4}).is_zero());
    rec.check("swapped frame", frame_component_check(a, {e1, e2, e4, -e3}).is_zero());
    for (int k = 0; k < 10; ++k)
      rec.check("boost/rotation frames", frame_component_check(a, random_frame(rs)).is_zero());
  }
}

void restricted_spectrum(Recorder& rec, RationalSampler& rs, int n) {
  for (int m = 0; m < 4; ++m) {
    const family::Ansatz ans = random_ansatz(rs);
    const CurvatureTensor a = build_family(ans);
    const Poly1 plus = char_poly(ansatz_matrix(ans));
    const Poly1 minus = char_poly(Scalar(-1) * ansatz_matrix(ans));
    for (int t = 0; t < n; ++t) {
      rec.check("unit spacelike x", char_poly(restrict_jacobi(a, random_unit_vector(rs, true)).matrix) == plus);
      rec.check("unit timelike x", char_poly(restrict_jacobi(a, random_unit_vector(rs, false)).matrix) == minus);
    }
  }
}

void null_plane_suite(Recorder& rec, RationalSampler& rs, int n) {
  const Poly4 pa = Poly4::var(0), pb = Poly4::var(1);
  auto identity = [&](const CurvatureTensor& a) {
    const NullPlaneDiagnostics d = null_plane_diagnostics(a);
    Poly4 q;
    for (int k = 0; k <= 4; ++k) q += d.q[k] * pa.pow(4 - k) * pb.pow(k);
    const auto cp = char_poly_coefficients(symbolic_jacobi(a, {pa, pb, pa, pb}));
    return cp[4] == Poly4(Scalar(1)) && cp[3].is_zero() && cp[2] == -(d.e1 * q) && cp[1].is_zero() &&
           cp[0].is_zero();
  };
  for (int t = 0; t < n; ++t) {
    const CurvatureTensor a = random_self_dual_einstein(rs);
    rec.check("self-dual Einstein: char_poly = l^2 (l^2 - Q E1)", identity(a));
  }
  rec.check("E1(A0) = 0", null_plane_diagnostics(build_A0()).e1.is_zero());
}

void paracomplex_space_form(Recorder& rec, RationalSampler& rs, int n) {
  for (int t = 0; t < n; ++t) {
    const CurvatureTensor a = build_family(family::ParacomplexSpaceForm{rs.nonzero()});
    const ClassificationVerdict v = classify_null_jordan(a);
    rec.check("k != 0: null Osserman", v.osserman.null.holds);
    rec.check("k != 0: not null Jordan Osserman", !v.is_family());
  }
  const ClassificationVerdict z = classify_null_jordan(build_family(family::ParacomplexSpaceForm{0}));
  rec.check("k = 0: constant curvature 0", z.kind == VerdictKind::ConstantCurvature && params_equal(z, {Scalar(0)}));
}

void cross_ratio_suite(Recorder& rec, RationalSampler& rs, int n) {
  for (int t = 0; t < n;) {
    const Scalar k1 = rs.surd_scalar(), k2 = rs.scalar(), k3 = rs.scalar();
    if (k2.is_zero() || (k3 + k1).is_zero()) continue;
    ++t;
    rec.check("predicate = quartic sign", cross_ratio_predicate(k1, k2, k3) == (paraquaternionic_quartic(k1, k2, k3).sign() > 0),
              triple(k1, k2, k3));
  }
  bool threw = false;
  try {
    cross_ratio_predicate(1, 0, 1);
  } catch (const DenominatorZero&) {
    threw = true;
  }
  rec.check("zero denominator rejected", threw);
}

struct Entry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"osserman-equivalence", "spacelike, timelike, Einstein + self-dual and null Osserman agree", 200},
       osserman_equivalence},
      {{"classification-positives", "the four null Jordan Osserman families classify into themselves", 50},
       classification_positives},
      {{"classification-negatives", "non-members carry rank witnesses", 5}, classification_negatives},
      {{"paraquaternionic-determinant", "determinant of the paraquaternionic coefficient matrix", 20},
       paraquaternionic_determinant},
      {{"type-ib-determinant", "values of the type Ib coefficient determinant", 20}, type_ib_determinant},
      {{"weyl-operator", "closed-form Weyl operator against direct assembly", 50}, weyl_operator_suite},
      {{"frame-orbit", "A_1214 - A_1223 vanishes on the frame orbit of anti-self-dual tensors", 20}, frame_orbit},
      {{"restricted-spectrum", "restricted Jacobi spectrum of ansatz tensors", 50}, restricted_spectrum},
      {{"null-plane-diagnostics", "Jacobi operator on the totally null plane", 50}, null_plane_suite},
      {{"paracomplex-space-form", "paracomplex space forms are null Osserman but not null Jordan Osserman", 10},
       paracomplex_space_form},
      {{"cross-ratio", "cross-ratio form of the paraquaternionic inequality", 200}, cross_ratio_suite},
  };
  return r;
}

}  // namespace

bool SuiteReport::ok() const {
  if (properties.empty()) return false;
  for (const auto& p : properties)
    if (!p.ok()) return false;
  return true;
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opt) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    SuiteReport rep{e.info.name, e.info.description, {}, 0};
    Recorder rec(rep);
    RationalSampler rs(opt.seed);
    const auto t0 = std::chrono::steady_clock::now();
    e.fn(rec, rs, opt.trials > 0 ? opt.trials : e.info.default_trials);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  throw InvalidArgument("unknown suite \"" + std::string(name) + "\"");
}

std::vector<std::string> suites_for(std::string_view kind, std::string_view number) {
  static const std::map<std::pair<std::string, std::string>, std::vector<std::string>> table = {
      {{"theorem", "1.1"}, {"osserman-equivalence"}},
      {{"theorem", "1.3"},
       {"classification-positives", "classification-negatives", "paraquaternionic-determinant", "type-ib-determinant",
        "cross-ratio"}},
      {{"theorem", "1.4"}, {"paracomplex-space-form"}},
      {{"lemma", "2.2"}, {"weyl-operator"}},
      {{"lemma", "2.3"}, {"frame-orbit"}},
      {{"lemma", "3.1"}, {"restricted-spectrum"}},
  };
  auto it = table.find({std::string(kind), std::string(number)});
  return it == table.end() ? std::vector<std::string>{} : it->second;
}

Json suite_json(const SuiteReport& r, bool timing) {
  Json props = Json::array();
  for (const auto& p : r.properties) {
    Json j{{"property", p.name}, {"passed", p.passed}, {"total", p.total}, {"ok", p.ok()}};
    if (!p.note.empty()) j["first_failure"] = p.note;
    props.push_back(j);
  }
  Json j{{"suite", r.name}, {"description", r.description}, {"ok", r.ok()}, {"properties", props}};
  if (timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace curv22
