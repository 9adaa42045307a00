#pragma once

// The twelve reproduction checks, shared by the acceptance test and the
// `repro-all` command. Each check reports a verdict, a short detail line and
// a JSON record; wall-clock time is measured by the runner.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maxdiam/gadgets.hpp"
#include "maxdiam/io.hpp"

namespace maxdiam {

struct ReproOptions {
  std::uint64_t seed = 20240607;
  std::uint64_t node_budget = default_node_budget();
  unsigned threads = 1;
  /// Verify this gadget file instead of searching for one.
  std::optional<std::string> gadget_path;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  /// Deterministic record of what was checked; no timing.
  Json record;

  bool within_limit() const { return seconds < limit_seconds; }
  bool ok() const { return passed && within_limit(); }
};

/// Runs all checks in dependency order; a failing or throwing check does not
/// stop the others. `on_result` fires after each one.
std::vector<CriterionResult> run_reproduction(const ReproOptions& options,
                                              const std::function<void(const CriterionResult&)>& on_result = {});

std::string summary_line(const CriterionResult& r);

}  // namespace maxdiam
