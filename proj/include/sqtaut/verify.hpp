#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sqtaut {

/// Static description of one replayable check.
struct CheckInfo {
  std::string id;
  std::string statement;  // what is being reproduced, in words
  double time_limit_seconds = 0;
};

struct CheckResult {
  CheckInfo info;
  bool passed = false;
  std::string detail;
  double seconds = 0;  // wall time, excluded from JSON reports
  bool within_limit() const { return seconds < info.time_limit_seconds; }
};

/// All checks in report order.
const std::vector<CheckInfo>& check_catalog();

/// Runs the selected checks (all when `only` is empty) in catalog order.
/// Unknown ids raise InputError. Exceptions inside a check count as failure.
std::vector<CheckResult> run_checks(const std::vector<std::string>& only = {});

/// Deterministic report (no timings).
nlohmann::json to_json(const std::vector<CheckResult>& results);

}  // namespace sqtaut
