#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modlie::suite {

enum class Status { passed, failed, skipped };

struct CheckResult {
  int number;
  std::string name;
  Status status;
  std::string detail;  // expected-vs-computed summary, or the failure witness
  double elapsed_seconds;
};

struct SuiteOptions {
  // Census rows above this n are reported SKIPPED instead of run.
  unsigned census_max_n = 3;
  unsigned census_threads = 4;
  std::uint64_t seed = 0;
};

// Runs the full acceptance list (14 checks); never throws — failures and
// exceptions are folded into the results.
std::vector<CheckResult> run_all(const SuiteOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);
const char* status_name(Status s);

}  // namespace modlie::suite
