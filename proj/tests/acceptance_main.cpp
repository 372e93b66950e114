// Acceptance gate: runs every numbered criterion and prints one verdict line
// each. Exit status is the number of failing criteria.

#include <cstdio>

#include "maw/suites.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= 14; ++id) {
    maw::CriterionResult r = maw::run_criterion(id);
    if (!r.passed) ++failed;
    std::printf("%s criterion %2d: %s [%lld cases] %s\n", r.passed ? "PASS" : "FAIL",
                r.id, r.title.c_str(), static_cast<long long>(r.cases),
                r.detail.c_str());
    std::fflush(stdout);
  }
  if (failed == 0)
    std::printf("all 14 criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", failed);
  return failed;
}
