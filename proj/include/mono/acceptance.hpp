#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mono::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  /// Wall-clock limit in seconds, 0 when the criterion has none.
  double time_limit = 0.0;
};

struct SuiteOptions {
  /// Seed of the randomized property runs.
  std::uint64_t seed = 20240601;
};

/// Runs the primary acceptance criteria in order. A criterion that throws or exceeds
/// its time limit fails.
std::vector<CriterionResult> run_primary_suite(const SuiteOptions& opt = {});

/// "PASS [n] name: detail (t s)" or "FAIL ...".
std::string format_line(const CriterionResult& r);

}  // namespace mono::acceptance
