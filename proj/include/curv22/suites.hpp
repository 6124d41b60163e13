#ifndef CURV22_SUITES_HPP
#define CURV22_SUITES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "curv22/serialize.hpp"

namespace curv22 {

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  /// First failure, if any.
  std::string note;
  bool ok() const { return total > 0 && passed == total; }
};

struct SuiteReport {
  std::string name;
  std::string description;
  std::vector<PropertyResult> properties;
  double seconds = 0;
  bool ok() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Main trial count; 0 selects the suite default.
  int trials = 0;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  int default_trials;
};

const std::vector<SuiteInfo>& suites();

/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opt = {});

/// Suite names behind a numbered result of the classification literature
/// (kind "theorem" or "lemma", e.g. "1.1"); empty when unknown.
std::vector<std::string> suites_for(std::string_view kind, std::string_view number);

/// With `timing` off the JSON omits wall-clock time, so reports are reproducible.
Json suite_json(const SuiteReport& r, bool timing = false);

}  // namespace curv22

#endif  // CURV22_SUITES_HPP
