// Acceptance criteria; one PASS/FAIL line per criterion. `--full` adds the long runs.

#include <cstring>
#include <iostream>

#include "caperiod/verify.hpp"

int main(int argc, char** argv) {
  using namespace caperiod;
  const Suite suite = argc > 1 && std::strcmp(argv[1], "--full") == 0 ? Suite::Full : Suite::Quick;
  int failed = 0;
  run_criteria(suite, 0, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (kCriterionCount - failed) << "/" << kCriterionCount << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
