#include "curv22/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "curv22/errors.hpp"

namespace curv22 {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string string_at(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  fail(path, "expected an exact scalar string, got " + j.dump());
}

Scalar scalar_at(const Json& j, const std::string& path) {
  const std::string text = string_at(j, path);
  try {
    return Scalar::parse(text);
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Json profile_json(const RankProfile& p) { return Json::array({p.r1, p.r2}); }

Json direction_json(const NullDirection& d, const RankProfile* p) {
  Json j;
  j["label"] = d.label();
  j["vector"] = vector_json(d.vector());
  if (p) j["profile"] = profile_json(*p);
  return j;
}

Json certificate_json(const OssermanCertificate& c) {
  Json j;
  j["holds"] = c.holds;
  Json cs = Json::array();
  for (const Scalar& s : c.constants) cs.push_back(scalar_json(s));
  j["constants"] = cs;
  if (!c.holds) {
    j["failing_power"] = c.failing_power;
    j["residual"] = c.residual.to_string();
  }
  return j;
}

Json parameter_json(const Parameter& p) {
  if (p.exact) return scalar_json(*p.exact);
  return Json{{"lo", rational_to_string(p.lo)}, {"hi", rational_to_string(p.hi)}};
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    const bool scalar_array = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    if (v.is_primitive()) {
      os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (scalar_array) {
      os << pad << key << ": [";
      bool first = true;
      for (const Json& e : v) {
        os << (first ? "" : ", ") << (e.is_string() ? e.get<std::string>() : e.dump());
        first = false;
      }
      os << "]\n";
    } else {
      os << pad << key << (j.is_object() ? ":" : "") << "\n";
      render(os, v, indent + 1);
    }
  }
}

}  // namespace

Json scalar_json(const Scalar& s) { return s.to_string(); }

Json vector_json(const Vec4& v) {
  Json j = Json::array();
  for (const Scalar& s : v) j.push_back(scalar_json(s));
  return j;
}

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(scalar_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json poly1_json(const Poly1& p) {
  Json j = Json::array();
  for (const Scalar& c : p.coeffs()) j.push_back(scalar_json(c));
  return j;
}

Json tensor_to_json(const CurvatureTensor& a) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
          const Scalar& v = a(i, j, k, l);
          if (v.is_zero()) continue;
          const std::string ijkl{char('1' + i), char('1' + j), char('1' + k), char('1' + l)};
          comps.push_back(Json{{"ijkl", ijkl}, {"value", scalar_json(v)}});
        }
  return Json{{"format", kTensorFormat}, {"components", comps}};
}

CurvatureTensor tensor_from_json(const Json& j) {
  const Json& format = member(j, "format", "$");
  if (!format.is_string() || format.get<std::string>() != kTensorFormat)
    fail("$.format", std::string("expected \"") + kTensorFormat + "\", got " + format.dump());
  const Json& comps = member(j, "components", "$");
  if (!comps.is_array()) fail("$.components", "expected an array");
  CurvatureTensor::Components raw;
  std::set<std::size_t> seen;
  for (std::size_t n = 0; n < comps.size(); ++n) {
    const std::string path = "$.components[" + std::to_string(n) + "]";
    const Json& c = comps[n];
    const Json& idx = member(c, "ijkl", path);
    if (!idx.is_string()) fail(path + ".ijkl", "expected a string of four digits 1..4");
    const std::string s = idx.get<std::string>();
    if (s.size() != 4 || s.find_first_not_of("1234") != std::string::npos)
      fail(path + ".ijkl", "expected four digits 1..4, got \"" + s + "\"");
    const std::size_t at = CurvatureTensor::index(s[0] - '1', s[1] - '1', s[2] - '1', s[3] - '1');
    if (!seen.insert(at).second) fail(path + ".ijkl", "duplicate component " + s);
    raw[at] = scalar_at(member(c, "value", path), path + ".value");
  }
  return CurvatureTensor::from_components(raw);
}

Json family_to_json(const FamilySpec& spec) {
  Json params = Json::object();
  for (const auto& [k, v] : family_params(spec)) params[k] = v;
  return Json{{"family", family_name(spec)}, {"params", params}};
}

FamilySpec family_from_json(const Json& j) {
  const Json& name = member(j, "family", "$");
  if (!name.is_string()) fail("$.family", "expected a string");
  const Json& params = member(j, "params", "$");
  if (!params.is_object()) fail("$.params", "expected an object");
  std::map<std::string, std::string> m;
  for (auto it = params.begin(); it != params.end(); ++it) m[it.key()] = string_at(it.value(), "$.params." + it.key());
  return make_family(name.get<std::string>(), m);
}

Json osserman_json(const OssermanReport& r) {
  Json j;
  j["spacelike_osserman"] = r.spacelike.holds;
  j["timelike_osserman"] = r.timelike.holds;
  j["einstein"] = r.einstein;
  j["duality"] = r.duality ? Json(to_string(*r.duality)) : Json(nullptr);
  j["einstein_and_selfdual"] = r.einstein_and_half_flat;
  j["null_osserman"] = r.null.holds;
  j["agreement"] = r.agreement;
  j["spacelike_certificate"] = certificate_json(r.spacelike);
  j["timelike_certificate"] = certificate_json(r.timelike);
  if (!r.null.holds) {
    j["null_certificate"] = Json{{"failing_coefficient", r.null.failing_coefficient},
                                 {"remainder", r.null.remainder.to_string()}};
  }
  return j;
}

Json jordan_json(const JordanReport& r) {
  Json j;
  j["type"] = to_string(r.type);
  j["char_poly"] = poly1_json(r.char_poly);
  j["min_poly"] = poly1_json(r.min_poly);
  Json roots = Json::array();
  for (const Eigenvalue& e : r.roots) {
    Json x;
    if (e.exact) x["value"] = scalar_json(*e.exact);
    else x["interval"] = Json::array({rational_to_string(e.lo), rational_to_string(e.hi)});
    x["multiplicity"] = e.multiplicity;
    if (r.type == JordanType::Ia) x["eigenspace"] = to_string(e.causal);
    roots.push_back(x);
  }
  j["roots"] = roots;
  j["frame_signs"] = Json::array({r.frame_signs[0], r.frame_signs[1], r.frame_signs[2]});
  return j;
}

Json survey_json(const SurveyResult& s) {
  if (const auto* c = std::get_if<SurveyConstant>(&s))
    return Json{{"constant", true}, {"profile", profile_json(c->profile)}, {"points", c->points}};
  const auto& w = std::get<RankWitness>(s);
  return Json{{"constant", false},
              {"first", direction_json(w.first, &w.first_profile)},
              {"second", direction_json(w.second, &w.second_profile)}};
}

Json verdict_json(const ClassificationVerdict& v) {
  Json j;
  j["family"] = v.is_family() ? Json(static_cast<int>(v.kind)) : Json(nullptr);
  j["name"] = to_string(v.kind);
  if (!v.is_family()) j["reason"] = to_string(v.reason);
  if (!v.params.empty()) {
    Json k = Json::array();
    Json named = Json::object();
    for (const Parameter& p : v.params) {
      k.push_back(parameter_json(p));
      named[p.name] = parameter_json(p);
    }
    j["k"] = k;
    j["params"] = named;
  }
  if (v.inequality) j["inequality"] = scalar_json(*v.inequality);
  if (v.inequality || v.reason == NotNJOReason::IneqFails || v.kind == VerdictKind::Paraquaternionic)
    j["inequality_sign"] = v.inequality_sign;
  if (v.cross_ratio) j["cross_ratio"] = scalar_json(*v.cross_ratio);
  return j;
}

Json witnesses_json(const ClassificationVerdict& v) {
  Json out = Json::array();
  for (const VectorWitness& w : v.vector_witnesses) {
    out.push_back(Json{{"kind", "rank"},
                       {"first", Json{{"label", w.first_label}, {"vector", vector_json(w.first)},
                                      {"profile", profile_json(w.first_profile)}}},
                       {"second", Json{{"label", w.second_label}, {"vector", vector_json(w.second)},
                                       {"profile", profile_json(w.second_profile)}}}});
  }
  if (v.rank_witness) {
    out.push_back(Json{{"kind", "rank"},
                       {"first", direction_json(v.rank_witness->first, &v.rank_witness->first_profile)},
                       {"second", direction_json(v.rank_witness->second, &v.rank_witness->second_profile)}});
  }
  if (v.sign_change) {
    Json p = direction_json(v.sign_change->positive, nullptr);
    p["determinant"] = scalar_json(v.sign_change->positive_value);
    Json n = direction_json(v.sign_change->negative, nullptr);
    n["determinant"] = scalar_json(v.sign_change->negative_value);
    out.push_back(Json{{"kind", "sign_change"}, {"positive", p}, {"negative", n}});
  }
  return out;
}

Json classification_report(const ClassificationVerdict& v) {
  Json j;
  j["format"] = kReportFormat;
  j["osserman_conditions"] = osserman_json(v.osserman);
  j["jordan_type"] = v.jordan ? Json(to_string(v.jordan->type)) : Json(nullptr);
  if (v.jordan) j["jordan"] = jordan_json(*v.jordan);
  j["verdict"] = verdict_json(v);
  j["witnesses"] = witnesses_json(v);
  if (v.survey) j["survey"] = survey_json(*v.survey);
  return j;
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  if (j.is_primitive()) return (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  render(os, j, 0);
  return os.str();
}

}  // namespace curv22
