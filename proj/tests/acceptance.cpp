// Acceptance gate: runs every check in the suite and prints one line per
// criterion. Exit status is nonzero when any check fails.

#include <cstdio>

#include "modlie/suite.hpp"

int main() {
  auto results = modlie::suite::run_all();
  for (const auto& r : results)
    std::printf("[%2d/%zu] %s  %s (%.2fs)%s%s\n", r.number, results.size(),
                modlie::suite::status_name(r.status), r.name.c_str(),
                r.elapsed_seconds, r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
  bool ok = modlie::suite::all_passed(results);
  std::printf("acceptance: %s\n", ok ? "ALL CHECKS PASSED" : "FAILURES PRESENT");
  return ok ? 0 : 1;
}
