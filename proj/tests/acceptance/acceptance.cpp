#include <cstdio>
#include <cstdlib>
#include <string>

#include "salg/verify.hpp"

int main(int argc, char** argv) {
  auto size = salg::SuiteSize::Full;
  if (argc > 1 && std::string(argv[1]) == "--quick") size = salg::SuiteSize::Quick;
  int failures = 0;
  for (int id = 1; id <= salg::kCriterionCount; ++id) {
    salg::CheckResult r = salg::run_criterion(id, size);
    const char* status = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
    std::printf("criterion %2d %s  %s (%.2fs) %s\n", r.id, status, r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed && !r.skipped) ++failures;
  }
  std::printf("%d criteria failed\n", failures);
  return failures ? EXIT_FAILURE : EXIT_SUCCESS;
}
