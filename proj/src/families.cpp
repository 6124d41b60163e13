#include "curv22/families.hpp"

#include <algorithm>
#include <optional>

#include "curv22/errors.hpp"

namespace curv22 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Fills a component array from a table of representatives, propagating each
// entry to its images under the curvature symmetries.
class Table {
 public:
  Table& set(std::string_view ijkl, const Scalar& value) {
    const std::size_t i = digit(ijkl[0]), j = digit(ijkl[1]), k = digit(ijkl[2]), l = digit(ijkl[3]);
    put(i, j, k, l, value);
    put(j, i, k, l, -value);
    put(i, j, l, k, -value);
    put(j, i, l, k, value);
    put(k, l, i, j, value);
    put(l, k, i, j, -value);
    put(k, l, j, i, -value);
    put(l, k, j, i, value);
    return *this;
  }
  CurvatureTensor build() const {
    CurvatureTensor::Components c;
    for (std::size_t p = 0; p < 256; ++p)
      if (entries_[p]) c[p] = *entries_[p];
    return CurvatureTensor::from_components(c);
  }

 private:
  static std::size_t digit(char ch) { return static_cast<std::size_t>(ch - '1'); }
  void put(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Scalar& v) {
    auto& slot = entries_[CurvatureTensor::index(i, j, k, l)];
    if (slot && *slot != v) throw InternalError("component table is inconsistent");
    slot = v;
  }
  std::array<std::optional<Scalar>, 256> entries_;
};

const SkewAdjoint& psi(std::size_t i) { return standard_paraquaternionic()[i]; }

CurvatureTensor build(const family::Constant& f) { return f.k0 * build_A0(); }

CurvatureTensor build(const family::ComplexForm& f) { return f.k0 * build_A0() + f.kJ * build_A_Psi(psi(0)); }

CurvatureTensor build(const family::Paracomplex& f) { return f.k0 * build_A0() + f.kP * build_A_Psi(psi(1)); }

CurvatureTensor build(const family::Paraquaternionic& f) {
  return f.k1 * build_A_Psi(psi(0)) + f.k2 * build_A_Psi(psi(1)) + f.k3 * build_A_Psi(psi(2));
}

CurvatureTensor build(const family::Ansatz& f) {
  const Scalar third = Scalar::frac(1, 3);
  CurvatureTensor a = f.k0 * build_A0();
  a += (third * f.x11) * build_A_Psi(psi(0));
  a += (third * f.x22) * build_A_Psi(psi(1));
  a += (third * f.x33) * build_A_Psi(psi(2));
  a += (third * f.x12) * build_A_Psi(psi(0) + psi(1));
  a += (third * f.x13) * build_A_Psi(psi(0) + psi(2));
  a += (third * f.x23) * build_A_Psi(psi(1) + psi(2));
  return a;
}

CurvatureTensor build(const family::TypeIa& f) {
  const Scalar third = Scalar::frac(1, 3);
  const Scalar& al = f.alpha;
  const Scalar& be = f.beta;
  const Scalar& ga = f.gamma;
  return Table()
      .set("1221", al)
      .set("4334", al)
      .set("1331", -be)
      .set("2442", -be)
      .set("1441", -ga)
      .set("3223", -ga)
      .set("1234", third * (Scalar(-2) * al + be + ga))
      .set("1423", third * (al + be - Scalar(2) * ga))
      .set("1342", third * (al - Scalar(2) * be + ga))
      .build();
}

CurvatureTensor build(const family::TypeIb& f) {
  const Scalar third = Scalar::frac(1, 3);
  CurvatureTensor a = (f.a - f.b) * build_A_Psi(psi(0));
  a += (-f.b - f.a) * build_A_Psi(psi(1));
  a += f.b * build_A_Psi(psi(0) + psi(1));
  a += f.c * build_A_Psi(psi(2));
  return third * a;
}

CurvatureTensor build(const family::TypeII& f) {
  const Scalar s(f.sign);
  const Scalar half = Scalar::frac(1, 2);
  const Scalar third = Scalar::frac(1, 3);
  const Scalar& al = f.alpha;
  const Scalar& be = f.beta;
  return Table()
      .set("1221", s * (al - half))
      .set("4334", s * (al - half))
      .set("1331", -s * (al + half))
      .set("4224", -s * (al + half))
      .set("1441", -be)
      .set("3223", -be)
      .set("2113", -s * half)
      .set("2443", -s * half)
      .set("1224", s * half)
      .set("1334", s * half)
      .set("1234", third * (s * (Scalar::frac(3, 2) - al) + be))
      .set("1423", third * Scalar(2) * (s * al - be))
      .set("1342", third * (s * (-al - Scalar::frac(3, 2)) + be))
      .build();
}

CurvatureTensor build(const family::TypeIII& f) {
  const Scalar r(Rational(0), Rational(1, 2));  // sqrt(2)/2
  const Scalar& al = f.alpha;
  return Table()
      .set("1221", al)
      .set("4334", al)
      .set("1331", -al)
      .set("4224", -al)
      .set("1441", -al)
      .set("3223", -al)
      .set("2114", -r)
      .set("2334", -r)
      .set("3114", r)
      .set("3224", -r)
      .set("1223", r)
      .set("1443", r)
      .set("1332", r)
      .set("1442", -r)
      .build();
}

CurvatureTensor build(const family::ParacomplexSpaceForm& f) {
  return (f.k / Scalar(4)) * (build_A0() - build_A_Psi(psi(1)));
}

struct Named {
  const char* name;
  std::vector<std::string> params;
};

const std::vector<Named>& registry() {
  // Same order as the FamilySpec alternatives.
  static const std::vector<Named> r = {
      {"constant", {"k0"}},
      {"complex", {"k0", "kJ"}},
      {"paracomplex", {"k0", "kP"}},
      {"paraquaternionic", {"k1", "k2", "k3"}},
      {"ansatz", {"k0", "x11", "x22", "x33", "x12", "x13", "x23"}},
      {"type_ia", {"alpha", "beta", "gamma"}},
      {"type_ib", {"a", "b", "c"}},
      {"type_ii", {"alpha", "beta", "sign"}},
      {"type_iii", {"alpha"}},
      {"paracomplex_space_form", {"k"}},
  };
  return r;
}

std::vector<Scalar> values(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Constant& f) { return std::vector<Scalar>{f.k0}; },
          [](const family::ComplexForm& f) { return std::vector<Scalar>{f.k0, f.kJ}; },
          [](const family::Paracomplex& f) { return std::vector<Scalar>{f.k0, f.kP}; },
          [](const family::Paraquaternionic& f) { return std::vector<Scalar>{f.k1, f.k2, f.k3}; },
          [](const family::Ansatz& f) { return std::vector<Scalar>{f.k0, f.x11, f.x22, f.x33, f.x12, f.x13, f.x23}; },
          [](const family::TypeIa& f) { return std::vector<Scalar>{f.alpha, f.beta, f.gamma}; },
          [](const family::TypeIb& f) { return std::vector<Scalar>{f.a, f.b, f.c}; },
          [](const family::TypeII& f) { return std::vector<Scalar>{f.alpha, f.beta, Scalar(f.sign)}; },
          [](const family::TypeIII& f) { return std::vector<Scalar>{f.alpha}; },
          [](const family::ParacomplexSpaceForm& f) { return std::vector<Scalar>{f.k}; },
      },
      spec);
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "1" || s == "+1" || s == "1/1") return 1;
  if (s == "-" || s == "-1" || s == "-1/1") return -1;
  throw InvalidArgument("type_ii: sign must be +1 or -1, got '" + s + "'");
}

}  // namespace

void validate(const FamilySpec& spec) {
  if (const auto* ib = std::get_if<family::TypeIb>(&spec); ib && ib->b.is_zero())
    throw InvalidArgument("type_ib: b must be nonzero");
  if (const auto* ii = std::get_if<family::TypeII>(&spec); ii && ii->sign != 1 && ii->sign != -1)
    throw InvalidArgument("type_ii: sign must be +1 or -1");
}

CurvatureTensor build_family(const FamilySpec& spec) {
  validate(spec);
  return std::visit([](const auto& f) { return build(f); }, spec);
}

Mat ansatz_matrix(const family::Ansatz& a) {
  Mat m(3, {a.x11 + a.x12 + a.x13, -a.x12, -a.x13,
            a.x12, -a.x22 - a.x12 - a.x23, -a.x23,
            a.x13, -a.x23, -a.x33 - a.x13 - a.x23});
  return m + a.k0 * Mat::identity(3);
}

std::string family_name(const FamilySpec& spec) { return registry().at(spec.index()).name; }

std::vector<std::string> family_param_names(std::string_view name) {
  for (const auto& n : registry())
    if (name == n.name) return n.params;
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

std::vector<std::pair<std::string, std::string>> family_params(const FamilySpec& spec) {
  const auto& names = registry().at(spec.index()).params;
  const auto vals = values(spec);
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == "sign")
      out.emplace_back(names[i], vals[i].sign() > 0 ? "+1" : "-1");
    else
      out.emplace_back(names[i], vals[i].to_string());
  }
  return out;
}

FamilySpec make_family(std::string_view name, const std::map<std::string, std::string>& params) {
  const auto names = family_param_names(name);
  for (const auto& [k, v] : params)
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw InvalidArgument("family '" + std::string(name) + "' has no parameter '" + k + "'");
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = params.find(key);
    if (it == params.end()) throw InvalidArgument("family '" + std::string(name) + "' needs parameter '" + key + "'");
    return it->second;
  };
  auto sc = [&](const std::string& key) { return Scalar::parse(get(key)); };

  FamilySpec spec;
  if (name == "constant") spec = family::Constant{sc("k0")};
  else if (name == "complex") spec = family::ComplexForm{sc("k0"), sc("kJ")};
  else if (name == "paracomplex") spec = family::Paracomplex{sc("k0"), sc("kP")};
  else if (name == "paraquaternionic") spec = family::Paraquaternionic{sc("k1"), sc("k2"), sc("k3")};
  else if (name == "ansatz")
    spec = family::Ansatz{sc("k0"), sc("x11"), sc("x22"), sc("x33"), sc("x12"), sc("x13"), sc("x23")};
  else if (name == "type_ia") spec = family::TypeIa{sc("alpha"), sc("beta"), sc("gamma")};
  else if (name == "type_ib") spec = family::TypeIb{sc("a"), sc("b"), sc("c")};
  else if (name == "type_ii") spec = family::TypeII{sc("alpha"), sc("beta"), parse_sign(get("sign"))};
  else if (name == "type_iii") spec = family::TypeIII{sc("alpha")};
  else spec = family::ParacomplexSpaceForm{sc("k")};
  validate(spec);
  return spec;
}

}  // namespace curv22
