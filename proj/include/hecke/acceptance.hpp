#pragma once

#include <string>
#include <vector>

namespace hecke {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  /// Replace pseudo-random sampling by fixed deterministic sequences.
  bool seedless = false;
  /// Criterion ids to run; empty runs all eleven.
  std::vector<int> only;
};

constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS  3  Elliptic ledger: ... (0.41 s)"
std::string ledger_line(const CriterionResult& r);

}  // namespace hecke
