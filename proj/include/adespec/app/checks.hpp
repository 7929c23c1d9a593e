#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adespec/graphs/graph_name.hpp"
#include "adespec/measures/measure.hpp"

namespace adespec::app {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;  // empty on success
};

struct VerifyOptions {
  std::size_t k_max = 20;  // loops to length 2 k_max, series to order 2 k_max
  /// Replaces the catalog measure of the graph under test.
  std::optional<measures::CycloMeasure> measure_override;
  /// Adds q^K to Theta before the identity checks.
  std::optional<long> perturb_theta;
};

/// Every per-graph check: loop oracles, resolvent, Stieltjes links, closed
/// forms, moments and decomposition. Symbolic names get the truncation checks.
std::vector<CheckResult> graph_checks(const graphs::GraphName& name, const VerifyOptions& opt);

/// Checks that are not tied to one catalog graph: tail recursions, the D/A
/// identity, T-series of derived measures, moment symmetries, periods.
std::vector<CheckResult> global_checks(const VerifyOptions& opt);

bool all_ok(const std::vector<CheckResult>& checks);

}  // namespace adespec::app
