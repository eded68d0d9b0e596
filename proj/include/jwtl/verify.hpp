// Property suites run by `jwtl verify` and the acceptance harness.
//
// Each check fans its cases out to a worker pool and keeps the results indexed
// by case, so reports do not depend on scheduling.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jwtl/json_io.hpp"

namespace jwtl {

struct CheckResult {
  std::string suite;
  std::string name;
  std::string certifies;  // the statement this check establishes
  long cases = 0;
  long failures = 0;
  std::optional<Json> counterexample;  // first failing case in case order
  double seconds = 0;                  // wall time, kept out of the JSON report
  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  int max_rank = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

Json to_json(const CheckResult& c);
Json to_json(const SuiteReport& r);

// arith, relations, engines, tilings, closed-forms, symmetry, golden.
const std::vector<std::string>& suite_names();

// Runs one suite or "all". Diagram-level checks cover ranks 2..max_rank.
// threads = 0 uses the hardware concurrency. Throws std::invalid_argument on
// an unknown suite or max_rank < 2.
SuiteReport run_suite(const std::string& name, int max_rank, unsigned threads = 0);

}  // namespace jwtl
