#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nambu {

struct SuiteItem {
  std::string id;
  int criterion = 0;
  std::string description;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<SuiteItem> items;
  bool pass = true;
  double seconds = 0;
};

/// Full regression battery: bracket tables, identities, Malcev constants,
/// Casimir centrality, roots, gradings, saturation and center probes.
/// Deterministic for a fixed seed.
SuiteReport run_regression_suite(std::uint64_t seed = 0);

/// Centrality and closedness of every built-in Casimir element.
SuiteReport run_casimir_suite();

} // namespace nambu
