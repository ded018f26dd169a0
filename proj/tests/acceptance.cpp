// Acceptance gate: runs every criterion and prints one pass/fail line each.
// Criteria 1-9 run in-process; criterion 10 drives the CLI binary twice (and
// across thread counts) and byte-compares the JSON output.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "circlehall/suite.hpp"

using namespace circlehall;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CriterionResult determinism_criterion() {
  CriterionResult r{10, "determinism and runtime of `suite --q 2`", false, "", 0};
  auto start = std::chrono::steady_clock::now();
#ifdef CIRCLEHALL_CLI_PATH
  std::string cli = CIRCLEHALL_CLI_PATH;
  std::string base = cli + ".suite";
  std::vector<std::string> outs;
  std::vector<std::string> invocations = {
      "suite --q 2 --threads 1",
      "suite --q 2 --threads 1",
      "suite --q 2 --threads 2",
  };
  for (size_t i = 0; i < invocations.size(); ++i) {
    std::string outfile = base + std::to_string(i) + ".json";
    std::string cmd = cli + " " + invocations[i] + " > " + outfile + " 2>/dev/null";
    int code = std::system(cmd.c_str());
    if (WEXITSTATUS(code) != 0) {
      r.detail = "CLI run failed: " + invocations[i];
      return r;
    }
    outs.push_back(slurp(outfile));
    std::remove(outfile.c_str());
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool identical = outs[0] == outs[1] && outs[0] == outs[2];
  bool in_time = elapsed < 600.0;
  r.passed = identical && in_time && !outs[0].empty();
  std::ostringstream d;
  d << "3 runs, " << (identical ? "byte-identical" : "OUTPUT MISMATCH") << ", "
    << (in_time ? "within" : "over") << " the 10-minute budget";
  r.detail = d.str();
  r.seconds = elapsed;
#else
  r.detail = "CLI path not configured";
#endif
  return r;
}

}  // namespace

int main() {
  SuiteOptions opt;  // both q values, single-threaded in-process
  std::vector<CriterionResult> results = run_acceptance_suite(opt);
  results.push_back(determinism_criterion());

  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] criterion %2d: %s (%s) [%.2fs]\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.seconds);
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
