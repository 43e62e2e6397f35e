// Release checklist driver: one verdict line per criterion, streamed as
// the fixtures finish. Exits 0 exactly when every criterion lands on its
// documented expected status, so the known divergences (printed as FAIL
// with the computed values) do not break the build while an unexpected
// flip in either direction does.
#include <cstdio>

#include "rookery/acceptance.hpp"

int main() {
  int mismatches = 0;
  int index = 0;
  const auto results =
      rookery::run_acceptance([&](const rookery::CriterionResult& r) {
        ++index;
        const bool as_documented = r.passed == r.expected_pass;
        std::printf("[%2d] %s  %s%s\n", index, r.passed ? "PASS" : "FAIL",
                    r.id.c_str(),
                    !r.passed && as_documented ? "  (documented divergence)"
                                               : "");
        std::printf("      claim:    %s\n", r.claim.c_str());
        std::printf("      computed: %s\n", r.detail.c_str());
        if (!as_documented) {
          ++mismatches;
          std::printf("      UNEXPECTED: this criterion was documented to %s\n",
                      r.expected_pass ? "pass" : "fail");
        }
        std::fflush(stdout);
      });

  int passed = 0, documented_fail = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    if (!r.passed && !r.expected_pass) ++documented_fail;
  }
  std::printf("%d/%zu criteria pass, %d documented divergences, "
              "%d unexpected statuses\n",
              passed, results.size(), documented_fail, mismatches);
  return mismatches == 0 ? 0 : 1;
}
