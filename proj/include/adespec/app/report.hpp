#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adespec/app/checks.hpp"
#include "adespec/cyclotomic/decompose.hpp"
#include "adespec/recursion/cyclo_factor.hpp"

namespace adespec::app {

using Json = nlohmann::ordered_json;

struct GraphRecord {
  graphs::GraphName name;
  std::vector<algebra::BigInt> loops;  // loop(0), loop(2), ..., loop(2 k_max)
  algebra::RationalFunction t_series;
  std::optional<recursion::ProductForm> t_factors;
  std::optional<measures::CycloMeasure> measure;  // empty for E7, E8
  std::optional<cyclotomic::Decomposition> decomposition;  // finite graphs only
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;

  bool ok() const { return all_ok(checks); }
};

struct Report {
  std::vector<GraphRecord> graphs;
  std::vector<CheckResult> global;  // empty unless requested

  bool ok() const;
};

GraphRecord make_record(const graphs::GraphName& name, const VerifyOptions& opt);

/// Records are computed concurrently when `parallel` is set and always
/// assembled in the order of `names`.
Report make_report(const std::vector<graphs::GraphName>& names, const VerifyOptions& opt,
                   bool parallel, bool with_global);

Json rational_json(const algebra::Rational& r);
Json measure_json(const measures::CycloMeasure& m);
Json ratfun_json(const algebra::RationalFunction& f);
Json decomposition_json(const cyclotomic::Decomposition& d,
                        const cyclotomic::SystemMatrix* sys = nullptr);
Json record_json(const GraphRecord& r);
Json report_json(const Report& r);

/// Compact single-line JSON with a trailing newline.
std::string emit_json(const Report& r);

std::string render_table(const Report& r);

}  // namespace adespec::app
