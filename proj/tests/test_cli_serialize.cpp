#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "curv22/errors.hpp"
#include "curv22/random.hpp"
#include "curv22/serialize.hpp"
#include "doctest.h"

using namespace curv22;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("curv22_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json classify_file(const std::string& path) {
  const Run r = invoke({"classify", "--input", path});
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("tensor JSON round trip") {
  RationalSampler rs(31);
  for (int t = 0; t < 10; ++t) {
    CurvatureTensor a = random_curvature_tensor(rs, 3);
    if (t % 2) a = a + Scalar::sqrt2() * build_A0();
    const Json j = tensor_to_json(a);
    CHECK(j["format"] == "curv22-v1");
    CHECK(tensor_from_json(Json::parse(j.dump())) == a);
  }
  CHECK(tensor_to_json(CurvatureTensor())["components"].empty());
}

TEST_CASE("tensor schema errors name the offending path") {
  auto error_of = [](const std::string& text) -> std::string {
    try {
      tensor_from_json(Json::parse(text));
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(error_of(R"({"components": []})").find("$: missing \"format\"") != std::string::npos);
  CHECK(error_of(R"({"format": "v0", "components": []})").find("$.format") != std::string::npos);
  CHECK(error_of(R"({"format": "curv22-v1", "components": {}})").find("$.components") != std::string::npos);
  CHECK(error_of(R"({"format": "curv22-v1", "components": [{"ijkl": "1221", "value": "1"}, {"ijkl": "1251", "value": "1"}]})")
            .find("$.components[1].ijkl") != std::string::npos);
  CHECK(error_of(R"({"format": "curv22-v1", "components": [{"ijkl": "1221", "value": 0.5}]})")
            .find("$.components[0].value") != std::string::npos);
  CHECK(error_of(R"({"format": "curv22-v1", "components": [{"ijkl": "1221", "value": "1/0"}]})")
            .find("$.components[0].value") != std::string::npos);
  CHECK(error_of(R"({"format": "curv22-v1", "components": [{"ijkl": "1221"}]})")
            .find("$.components[0]: missing \"value\"") != std::string::npos);
  CHECK(error_of(R"({"format": "curv22-v1", "components": [{"ijkl": "1221", "value": "1"}, {"ijkl": "1221", "value": "1"}]})")
            .find("duplicate") != std::string::npos);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"format": "curv22-v1", "components": [{"ijkl": "1221", "value": "1"}]})")),
                  SymmetryViolation);
}

TEST_CASE("family JSON round trip") {
  using namespace family;
  const std::vector<FamilySpec> specs = {Constant{5}, ComplexForm{1, 2}, Paracomplex{0, Scalar::frac(1, 3)},
                                         Paraquaternionic{1, -2, 3}, TypeII{1, 2, -1}, TypeIII{Scalar::sqrt2()},
                                         ParacomplexSpaceForm{4}};
  for (const FamilySpec& s : specs) {
    const Json j = family_to_json(s);
    CHECK(family_to_json(family_from_json(j)) == j);
    CHECK(build_family(family_from_json(j)) == build_family(s));
  }
  CHECK(family_to_json(Paraquaternionic{1, -2, 3}).dump() ==
        R"({"family":"paraquaternionic","params":{"k1":"1","k2":"-2","k3":"3"}})");
}

TEST_CASE("generate then classify recovers families 1-4") {
  TempDir dir;
  const std::string f = dir.file("t.json");
  struct Case {
    std::string family, params;
    int number;
    std::vector<std::string> k;
  };
  const std::vector<Case> cases = {{"constant", "k0=5", 1, {"5"}},
                                   {"complex", "k0=-1/2,kJ=2", 2, {"-1/2", "2"}},
                                   {"paracomplex", "k0=0,kP=3", 3, {"3"}},
                                   {"paraquaternionic", "k1=1,k2=2,k3=3", 4, {"1", "2", "3"}}};
  for (const Case& c : cases) {
    REQUIRE(invoke({"generate", "--family", c.family, "--params", c.params, "--output", f}).code == 0);
    const Json r = classify_file(f);
    CHECK(r["verdict"]["family"] == c.number);
    CHECK(r["verdict"]["k"] == Json(c.k));
    CHECK(r["osserman_conditions"]["agreement"] == true);
    CHECK(r["survey"]["constant"] == true);
  }
  REQUIRE(invoke({"generate", "--family", "paraquaternionic", "--params", "k1=1,k2=2,k3=3", "--output", f}).code == 0);
  const Json r = classify_file(f);
  CHECK(r["verdict"]["inequality"] == "72");
  CHECK(r["verdict"]["cross_ratio"] == "9/8");
  CHECK(r["jordan_type"] == "Ia");
}

TEST_CASE("classify reports witnesses for type II") {
  TempDir dir;
  const std::string f = dir.file("ii.json");
  REQUIRE(invoke({"generate", "--family", "type_ii", "--params", "alpha=1,beta=2,sign=+1", "-o", f}).code == 0);
  const Json r = classify_file(f);
  CHECK(r["verdict"]["family"].is_null());
  CHECK(r["verdict"]["reason"] == "WrongType");
  CHECK(r["jordan_type"] == "II");
  const Json& w = r["witnesses"][0];
  CHECK(w["first"]["label"] == "e2-e3");
  CHECK(w["second"]["label"] == "e2+e3");
  CHECK(w["first"]["profile"][0] == 1);
  CHECK(w["second"]["profile"][0] == 2);
}

TEST_CASE("type III file carries the sqrt2 entries") {
  const Run r = invoke({"generate", "--family", "type_iii", "--params", "alpha=2"});
  REQUIRE(r.code == 0);
  const CurvatureTensor a = tensor_from_json(Json::parse(r.out));
  CHECK(a.at("2114") == Scalar(0, Rational(-1, 2)));
  CHECK(a.at("2334") == Scalar(0, Rational(-1, 2)));
  CHECK(r.out.find("\"-1/2*sqrt2\"") != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir dir;
  const std::string bad = dir.file("bianchi.json");
  write(bad, R"({"format": "curv22-v1", "components": [
    {"ijkl": "1234", "value": "1"}, {"ijkl": "2134", "value": "-1"}, {"ijkl": "1243", "value": "-1"},
    {"ijkl": "2143", "value": "1"}, {"ijkl": "3412", "value": "1"}, {"ijkl": "4312", "value": "-1"},
    {"ijkl": "3421", "value": "-1"}, {"ijkl": "4321", "value": "1"}]})");
  Run r = invoke({"classify", "--input", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("BianchiViolation") != std::string::npos);

  const std::string broken = dir.file("broken.json");
  write(broken, "{not json");
  CHECK(invoke({"classify", "--input", broken}).code == 2);
  CHECK(invoke({"classify", "--input", dir.file("missing.json")}).code == 3);
  CHECK(invoke({"generate", "--family", "constant", "--params", "k0=1", "-o", dir.file("no/such/dir.json")}).code == 3);
  CHECK(invoke({"generate", "--family", "type_ib", "--params", "a=1,b=0,c=1"}).code == 2);
  CHECK(invoke({"generate", "--family", "nosuch", "--params", "a=1"}).code == 2);
  CHECK(invoke({"generate", "--family", "constant", "--params", "k0=0.5"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"classify"}).code == 2);
  CHECK(invoke({"verify", "--theorem", "9.9"}).code == 2);
  CHECK(invoke({"verify", "--suite", "nosuch"}).code == 2);

  const std::string pcx = dir.file("random.json");
  RationalSampler rs(32);
  write(pcx, tensor_to_json(random_curvature_tensor(rs)).dump());
  r = invoke({"survey", "--input", pcx});
  CHECK(r.code == 2);
  CHECK(r.err.find("NotNullOsserman") != std::string::npos);
}

TEST_CASE("survey command") {
  TempDir dir;
  const std::string f = dir.file("pc.json");
  REQUIRE(invoke({"generate", "--family", "paracomplex", "--params", "k0=1,kP=2", "-o", f}).code == 0);
  const Run r = invoke({"survey", "--input", f});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["constant"] == false);
  CHECK(j["first"]["vector"] == Json({"1", "0", "1", "0"}));
  CHECK(j["second"]["vector"] == Json({"1", "0", "0", "1"}));
  CHECK(j["grid_points"] == 17 * 17 + 64);
  CHECK(Json::parse(invoke({"survey", "--input", f, "--grid", "2", "--random-points", "0"}).out)["grid_points"] == 25);
}

TEST_CASE("seeded ansatz generation is deterministic and matches the library") {
  TempDir dir;
  const std::string f = dir.file("ansatz.json");
  const Run a = invoke({"generate", "--family", "ansatz", "--seed", "42"});
  const Run b = invoke({"generate", "--family", "ansatz", "--seed", "42", "-o", f});
  const Run c = invoke({"generate", "--family", "ansatz", "--seed", "43"});
  REQUIRE(a.code == 0);
  CHECK(a.out == slurp(f));
  CHECK(a.out != c.out);

  RationalSampler rs(42);
  const CurvatureTensor lib = build_family(random_ansatz(rs));
  CHECK(tensor_from_json(Json::parse(a.out)) == lib);
  const Run r1 = invoke({"classify", "--input", f, "--seed", "7"});
  const Run r2 = invoke({"classify", "--input", f, "--seed", "7"});
  CHECK(r1.out == r2.out);
  CHECK(Json::parse(r1.out) == classification_report(classify_null_jordan(lib, {7, 64, 8})));
}

TEST_CASE("generate from a family spec file") {
  TempDir dir;
  const std::string spec = dir.file("spec.json");
  write(spec, R"({"family": "complex", "params": {"k0": "1", "kJ": "sqrt2"}})");
  const Run r = invoke({"generate", "--input", spec});
  REQUIRE(r.code == 0);
  CHECK(tensor_from_json(Json::parse(r.out)) == build_family(family::ComplexForm{1, Scalar::sqrt2()}));
  CHECK(invoke({"generate", "--input", spec, "--family", "constant"}).code == 2);
}

TEST_CASE("verify command") {
  const Run r = invoke({"verify", "--theorem", "1.1", "--trials", "3", "--seed", "5"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["suites"][0]["suite"] == "osserman-equivalence");
  CHECK(invoke({"verify", "--theorem", "1.1", "--trials", "3", "--seed", "5"}).out == r.out);
  CHECK(invoke({"verify", "--lemma", "2.2", "--trials", "3"}).code == 0);
  const Run t = invoke({"verify", "--suite", "cross-ratio", "--trials", "10", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("suite: cross-ratio") != std::string::npos);
}
