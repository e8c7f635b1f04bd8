#pragma once

#include <string>
#include <vector>

namespace robineig::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  /// One line per individual check, prefixed "ok" or "FAIL".
  std::vector<std::string> details;
};

CriterionResult beta_star_correctness();       // 1
CriterionResult regime_reproduction_1d();      // 2
CriterionResult solver_cross_validation();     // 3
CriterionResult reduction_equivalence();       // 4
CriterionResult shell_structure_checks();     // 5
CriterionResult shell_regime_fidelity();       // 6
CriterionResult invariant_suites();            // 7

/// Suite names accepted by run(): "all" or the slug of one criterion, e.g.
/// "beta_star", "regimes_1d", "cross_validation", "reduction",
/// "shell_structure", "shell_fidelity", "invariants", or its number.
std::vector<std::string> suite_names();
std::vector<CriterionResult> run(const std::string& suite);

/// "[PASS] 1 beta_star (0.8 s / 30 s)" followed by indented detail lines.
std::string format(const CriterionResult& r, bool with_details = true);

}  // namespace robineig::acceptance
