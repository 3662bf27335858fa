// SPDX-License-Identifier: Apache-2.0
//
// Seeded verification suites over every module: each named check draws its
// own fixtures from the given seed, evaluates one identity, inequality or
// limit, and reports a pass/fail line with the worst observed deviation.
// Results are deterministic functions of the seed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace renyi::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> results;
  bool all_passed = false;
};

std::vector<std::string> check_names();

CheckResult run_check(const std::string& name, std::uint64_t seed);

/// Runs every check (possibly in parallel; output order is fixed).
SuiteReport run_all(std::uint64_t seed, int max_threads);

std::string format_report(const SuiteReport& report, std::uint64_t seed);

}  // namespace renyi::verify
