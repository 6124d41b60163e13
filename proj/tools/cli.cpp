#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "curv22/errors.hpp"
#include "curv22/random.hpp"
#include "curv22/serialize.hpp"
#include "curv22/suites.hpp"

namespace curv22::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input, output, format = "json";
  std::uint64_t seed = 0;
  int trials = 0;
  int grid = 8;
  int random_points = 64;
  std::string family, params, theorem, lemma, suite;
};

const char* error_kind(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const SymmetryViolation*>(&e)) return "SymmetryViolation";
  if (dynamic_cast<const BianchiViolation*>(&e)) return "BianchiViolation";
  if (dynamic_cast<const NotNullOsserman*>(&e)) return "NotNullOsserman";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const InternalError*>(&e)) return "InternalError";
  return "Error";
}

std::string read_file(const std::string& path) {
  if (path.empty()) throw InvalidArgument("--input is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return ss.str();
}

Json read_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const Config& cfg, const Json& j, std::ostream& out) {
  const std::string text = cfg.format == "text" ? render_text(j) : j.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + cfg.output);
  f << text;
  if (!f) throw IoError("error writing " + cfg.output);
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidArgument("--params: expected key=value, got \"" + item + "\"");
    if (!m.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
      throw InvalidArgument("--params: duplicate key " + item.substr(0, eq));
  }
  return m;
}

ClassifyOptions classify_options(const Config& cfg) {
  return {cfg.seed, cfg.random_points, cfg.grid};
}

int cmd_classify(const Config& cfg, std::ostream& out) {
  const CurvatureTensor a = tensor_from_json(read_json(cfg.input));
  emit(cfg, classification_report(classify_null_jordan(a, classify_options(cfg))), out);
  return kOk;
}

int cmd_survey(const Config& cfg, std::ostream& out) {
  const CurvatureTensor a = tensor_from_json(read_json(cfg.input));
  const auto grid = default_null_grid(cfg.seed, cfg.random_points, cfg.grid);
  Json j = survey_json(null_jordan_rank_survey(a, grid));
  j["grid_points"] = grid.size();
  emit(cfg, j, out);
  return kOk;
}

int cmd_generate(const Config& cfg, std::ostream& out) {
  FamilySpec spec;
  if (!cfg.input.empty()) {
    if (!cfg.family.empty() || !cfg.params.empty())
      throw InvalidArgument("generate: give either --input or --family/--params");
    spec = family_from_json(read_json(cfg.input));
  } else if (cfg.family.empty()) {
    throw InvalidArgument("generate: --family is required");
  } else if (cfg.family == "ansatz" && cfg.params.empty()) {
    RationalSampler rs(cfg.seed);
    spec = random_ansatz(rs);
  } else {
    spec = make_family(cfg.family, parse_params(cfg.params));
  }
  validate(spec);
  Json j = tensor_to_json(build_family(spec));
  j["generator"] = family_to_json(spec);
  emit(cfg, j, out);
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  std::vector<std::string> names;
  const int selectors = !cfg.theorem.empty() + !cfg.lemma.empty() + !cfg.suite.empty();
  if (selectors > 1) throw InvalidArgument("verify: give at most one of --theorem, --lemma, --suite");
  if (!cfg.theorem.empty()) names = suites_for("theorem", cfg.theorem);
  else if (!cfg.lemma.empty()) names = suites_for("lemma", cfg.lemma);
  else if (!cfg.suite.empty()) names.push_back(cfg.suite);
  else
    for (const auto& s : suites()) names.push_back(s.name);
  if (names.empty())
    throw InvalidArgument("verify: no suite for " + (cfg.theorem.empty() ? "lemma " + cfg.lemma : "theorem " + cfg.theorem));
  if (cfg.trials < 0) throw InvalidArgument("verify: --trials must be at least 1");

  Json reports = Json::array();
  bool ok = true;
  for (const auto& n : names) {
    const SuiteReport r = run_suite(n, {cfg.seed, cfg.trials});
    ok = ok && r.ok();
    reports.push_back(suite_json(r));
  }
  emit(cfg, Json{{"seed", cfg.seed}, {"trials", cfg.trials}, {"ok", ok}, {"suites", reports}}, out);
  return ok ? kOk : kSuiteFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebraic curvature tensors of signature (2,2): Osserman conditions and null Jordan classification",
               "curv22"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* c) {
    c->add_option("--output,-o", cfg.output, "Output file (default stdout)");
    c->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--seed", cfg.seed, "Seed for every randomized choice");
  };
  auto grid = [&](CLI::App* c) {
    c->add_option("--grid", cfg.grid, "Half-angle grid denominator: t, u in {k/grid : |k| <= grid}")
        ->check(CLI::Range(1, 64));
    c->add_option("--random-points", cfg.random_points, "Seeded random null directions added to the grid")
        ->check(CLI::Range(0, 100000));
  };

  CLI::App* classify = app.add_subcommand("classify", "Classify a tensor file");
  classify->add_option("--input,-i", cfg.input, "Tensor file (curv22-v1)")->required();
  common(classify);
  grid(classify);

  CLI::App* survey = app.add_subcommand("survey", "Rank profiles of J(v) over the null-direction grid");
  survey->add_option("--input,-i", cfg.input, "Tensor file (curv22-v1)")->required();
  common(survey);
  grid(survey);

  CLI::App* generate = app.add_subcommand("generate", "Write the tensor of a model family");
  generate->add_option("--family", cfg.family, "Family name");
  generate->add_option("--params", cfg.params, "Parameters as k=v,k=v (exact scalars)");
  generate->add_option("--input,-i", cfg.input, "Family spec file {\"family\", \"params\"}");
  common(generate);

  CLI::App* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--trials", cfg.trials, "Main trial count (default: per suite)");
  verify->add_option("--suite", cfg.suite, "Suite name");
  verify->add_option("--theorem", cfg.theorem, "Suites behind a numbered theorem, e.g. 1.1");
  verify->add_option("--lemma", cfg.lemma, "Suites behind a numbered lemma, e.g. 2.2");
  common(verify);

  std::vector<std::string> argv{"curv22"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<char*> cargv;
  for (auto& s : argv) cargv.push_back(s.data());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "curv22: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*classify) return cmd_classify(cfg, out);
    if (*survey) return cmd_survey(cfg, out);
    if (*generate) return cmd_generate(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
  } catch (const IoError& e) {
    err << "curv22: IoError: " << e.what() << "\n";
    return kIo;
  } catch (const InternalError& e) {
    err << "curv22: InternalError: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "curv22: " << error_kind(e) << ": " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace curv22::cli
