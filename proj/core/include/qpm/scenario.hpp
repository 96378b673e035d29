#pragma once

// Runs one configured sweep and packages the result as a table of
// (omega, Re, Im) rows plus string metadata.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qpm/config.hpp"

namespace qpm {

struct ResultTable {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::array<double, 3>> rows;  // omega_rad_s, re, im

  /// Value of a metadata key, or "" if absent.
  std::string meta_value(const std::string& key) const;
};

/// Library version baked in at build time.
std::string code_version();

/// Dispatches on cfg.scenario. Solver failures are rethrown as
/// NumericalError with the scenario, variant and frequency prepended.
ResultTable run_scenario(const ScenarioConfig& cfg);

}  // namespace qpm
