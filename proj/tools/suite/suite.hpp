#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Acceptance suite shared by `sccay reproduce` and the acceptance test.
namespace sccay::suite {

enum class Tier { kStandard, kExtended };

std::string to_string(Tier tier);

struct CriterionInfo {
  int id = 0;
  std::string name;
  double time_limit_seconds = 0.0;
  std::string summary;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double time_limit_seconds = 0.0;
  /// One line per sub-check, "ok ..." or "FAIL ...".
  std::vector<std::string> checks;
};

struct SuiteOptions {
  Tier tier = Tier::kStandard;
  std::uint64_t seed = 20240917;
};

/// The criteria matrix for a tier, with the time limits that apply to it.
std::vector<CriterionInfo> criteria(Tier tier);

/// Runs one criterion. A criterion passes when every sub-check passes and
/// the wall-clock time stays within its limit.
CriterionResult run_criterion(int id, const SuiteOptions& options);
std::vector<CriterionResult> run_suite(const SuiteOptions& options);

/// "[PASS] 3 davis p=3 ... (1.23 s / limit 60 s)".
std::string format_line(const CriterionResult& result);

}  // namespace sccay::suite
