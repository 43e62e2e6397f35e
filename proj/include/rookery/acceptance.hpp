#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rookery {

// One entry of the release checklist. `expected_pass` is false for the
// documented divergences: claims the suite still states and computes
// faithfully, but whose published values disagree with what the
// computation returns. Those print as failures with the computed values
// attached; see the README for the analysis.
struct CriterionResult {
  std::string id;     // stable kebab-case identifier
  std::string claim;  // the assertion, with its asserted values
  bool passed = false;
  bool expected_pass = true;
  std::string detail;  // computed values backing the verdict
};

using CriterionCallback = std::function<void(const CriterionResult&)>;

// Runs the whole checklist in a fixed order. Every criterion is
// deterministic and self-contained; the callback fires after each one so
// drivers can stream verdicts while the heavier fixtures run.
std::vector<CriterionResult> run_acceptance(const CriterionCallback& progress = {});

}  // namespace rookery
