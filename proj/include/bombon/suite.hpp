#pragma once

// Randomized regression suite over every module's invariants. Each property
// draws from its own generator derived from the run seed, so adding or
// reordering properties leaves the others' samples unchanged.

#include <string>
#include <vector>

#include "bombon/verify.hpp"

namespace bombon {

struct SuiteOptions {
  /// Fault injection for harness self-tests: the suite's line classifier
  /// reports every Circle as Empty.
  bool corrupt_classifier = false;
};

struct PropertyResult {
  std::string module;
  std::string name;
  int trials = 0;
  int failures = 0;
  int excluded = 0;  ///< low-confidence draws skipped
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }
};

struct SuiteReport {
  RunConfig config;
  SuiteOptions options;
  std::vector<PropertyResult> properties;

  bool passed() const noexcept;
  /// 0 when every property passed, 1 otherwise.
  int exit_code() const noexcept { return passed() ? 0 : 1; }
};

/// Runs every property with trial counts scaled by cfg.n_lines (100 gives
/// the full run, 10 a smoke run). Ambient dimensions stay at most 6.
SuiteReport theorem_suite(const RunConfig& cfg, const SuiteOptions& opt = {});

json::Json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace bombon
