#pragma once

// The acceptance suite shared by `excmono verify-all` and the test binary.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace excmono {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string module;
  std::string claim;
  std::vector<CheckResult> checks;
  double seconds = 0;  // wall time; left out of JSON unless asked for

  bool passed() const;
  std::vector<std::string> failures() const;  // "module: claim: check (detail)"
  nlohmann::json to_json(bool with_timing) const;
};

struct VerifyOptions {
  bool fast = false;        // skip the E8 Chevalley build
  std::uint64_t seed = 1;   // randomized Jacobi / invariance sampling
};

constexpr int kInProcessCriteria = 8;  // 1..8; 9 compares whole runs

CriterionResult run_criterion(int id, const VerifyOptions& opts);

// Criteria 1..8, then 9: the whole suite run a second time in-process and
// compared byte for byte.
std::vector<CriterionResult> run_all(const VerifyOptions& opts);

}  // namespace excmono
