#ifndef ANTH_SUITES_HPP
#define ANTH_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace anth {

struct CheckResult {
  std::string proposition;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when everything passed
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Registered suite names, in run order for "all".
const std::vector<std::string>& suite_names();

/// Runs a named verification suite; deterministic for a given seed and count.
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t count);

}  // namespace anth

#endif  // ANTH_SUITES_HPP
