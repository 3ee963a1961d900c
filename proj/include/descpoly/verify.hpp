#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace descpoly {

/// Result of one invariant sweep.
struct SuiteReport {
  std::string suite;
  int max_n = 0;  // the size actually swept (suites clamp to their own ceiling)
  std::map<std::string, long> cases;  // per check
  long failures = 0;
  nlohmann::json first_failure;  // null when everything passed

  bool ok() const { return failures == 0; }
  long total_cases() const;
  void fail(const std::string& check, nlohmann::json detail);
  nlohmann::json to_json() const;
};

/// Suite names accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

/// formulas, configs, words, rook, foata, hypergeom; "all" runs each in turn.
/// Random choices come from a std::mt19937_64 seeded with seed.
std::vector<SuiteReport> run_suite(const std::string& suite, int max_n, std::uint64_t seed);

/// The narrower hypergeometric sweeps: pfaff, balanced, cor35. max bounds the sweep size.
SuiteReport run_hypergeom_suite(const std::string& which, int max);

}  // namespace descpoly
