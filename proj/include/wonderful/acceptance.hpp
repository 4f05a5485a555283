#pragma once

// End-to-end cross-checks between the generating series, the brute-force
// enumerations and known reference values. Shared by the acceptance
// test binary and `wonderful selftest`.

#include <functional>
#include <string>
#include <vector>

namespace wonderful {

struct CriterionResult {
  unsigned id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0 when untimed
  std::string detail;        // first failure, or a short summary
};

/// Formats one line: "PASS  3  full monomial series vs enumeration  (1.2 s)".
std::string format_result(const CriterionResult& r);

/// Runs every criterion in order, reporting each as soon as it finishes.
std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& on_result = {});

/// Runs a single criterion, 1-based.
CriterionResult run_criterion(unsigned id);

inline constexpr unsigned kCriterionCount = 11;

}  // namespace wonderful
