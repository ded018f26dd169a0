#pragma once

#include <string>
#include <vector>

#include "circlehall/json_io.hpp"

namespace circlehall {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // deterministic summary (no timings)
  double seconds = 0.0;
};

struct SuiteOptions {
  int q_filter = 0;  // 0 = both 2 and 3 where a criterion is q-parameterized
  int threads = 1;
  long long seed = 1;
};

// Criteria 1..9; criterion 10 (determinism of the CLI) lives in the
// acceptance binary, which invokes the CLI twice.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opt);

json suite_to_json(const std::vector<CriterionResult>& results);

}  // namespace circlehall
