/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ipart {

struct CaseResult {
  std::string input;
  std::optional<std::string> expected;
  std::string got;
  bool passed = true;
};

/* One verification suite run. Deterministic in (suite, seed); carries no timings. */
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  void add(std::string input, std::optional<std::string> expected, std::string got, bool passed);
  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0; }
  /* {"suite", "cases": [{input, expected?, got, status}], "summary": {pass, fail}, "seed"} on one line. */
  std::string to_json_line() const;
};

/* Suite names in the stable order `verify all` runs them. */
const std::vector<std::string>& suite_names();

/* A one-line description of what the suite checks. */
std::string suite_description(const std::string& name);

/* Throws std::invalid_argument for an unknown name. */
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

}  // namespace ipart
