#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glmcr/rational.hpp"
#include "glmcr/report.hpp"

namespace glmcr {

struct SuiteConfig {
  std::string suite = "all";
  /// Chain length. Unset: every chain-based suite runs its own default
  /// grid of lengths; set: that single length everywhere.
  std::optional<std::size_t> sites;
  Rat c = Rat(1);
  std::uint64_t seed = 7;
  /// Configurations in which any single drawn set is larger are skipped.
  std::size_t max_set_size = 6;
  /// Draws per configuration. Unset: per-suite default.
  std::optional<std::size_t> draws;
  /// Fill elapsed_ms (makes reports run-dependent).
  bool timing = false;

  /// ConfigError on an unknown suite or out-of-range values.
  void validate() const;
};

/// Registered suite names, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one suite (or all of them) and returns the finalized report.
Report run_suite(const SuiteConfig& cfg);

}  // namespace glmcr
