#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tcalc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample on failure
};

struct SuiteOptions {
  int max_n = -1;          // -1: per-suite default
  unsigned seed = 12345;   // randomized checks are deterministic per seed
  // Replaceable binomial hook; tests inject a corrupted one to exercise the
  // failure contract.
  std::function<long long(int, int)> binom;
};

const std::vector<std::string>& suite_names();  // excludes "all"

// Runs one named suite ("all" runs every suite in order).
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opts = {});

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace tcalc
