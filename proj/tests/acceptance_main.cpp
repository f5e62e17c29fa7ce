#include <cstdio>

#include <staircase/checks.hpp>

// Runs the full acceptance battery, one line per criterion. Exit status is
// nonzero when any criterion fails; details stay visible either way.
int main() {
  int failures = 0;
  for (int id : staircase::suite_criteria("all")) {
    const auto c = staircase::run_criteria({id}).front();
    std::printf("%s %s | %s\n", c.passed ? "[PASS]" : "[FAIL]",
                c.name.c_str(), c.detail.c_str());
    std::fflush(stdout);
    if (!c.passed) ++failures;
  }
  if (failures == 0) {
    std::printf("all 12 criteria passed\n");
    return 0;
  }
  std::printf("%d of 12 criteria failed\n", failures);
  return 1;
}
