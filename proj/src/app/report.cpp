#include "adespec/app/report.hpp"

#include <chrono>
#include <future>
#include <limits>
#include <sstream>

#include "adespec/error.hpp"
#include "adespec/graphs/graph.hpp"
#include "adespec/series/jones.hpp"

namespace adespec::app {

using algebra::BigInt;
using algebra::Rational;
using algebra::RationalFunction;

bool Report::ok() const {
  if (!all_ok(global)) return false;
  for (const auto& g : graphs)
    if (!g.ok()) return false;
  return true;
}

GraphRecord make_record(const graphs::GraphName& name, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  GraphRecord r;
  r.name = name;
  const auto entry = measures::catalog_measure(name);
  r.measure = opt.measure_override ? opt.measure_override : entry.measure;
  if (name.is_symbolic()) {
    r.loops = graphs::loop_counts(graphs::truncate_infinite(name, 2 * opt.k_max + 2), opt.k_max);
    r.t_series = entry.t_series;
  } else {
    const auto g = graphs::build_graph(name);
    r.loops = graphs::loop_counts(g, opt.k_max);
    r.t_series = series::t_series(
        series::jones_theta(series::poincare_resolvent(graphs::decompose(g))));
    r.decomposition = cyclotomic::decompose_graph(name);
  }
  r.t_factors = recursion::product_form(r.t_series);
  r.checks = graph_checks(name, opt);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

Report make_report(const std::vector<graphs::GraphName>& names, const VerifyOptions& opt,
                   bool parallel, bool with_global) {
  Report rep;
  if (parallel) {
    std::vector<std::future<GraphRecord>> jobs;
    for (const auto& n : names)
      jobs.push_back(std::async(std::launch::async, [n, &opt] { return make_record(n, opt); }));
    std::future<std::vector<CheckResult>> global;
    if (with_global) global = std::async(std::launch::async, [&opt] { return global_checks(opt); });
    for (auto& j : jobs) rep.graphs.push_back(j.get());
    if (with_global) rep.global = global.get();
  } else {
    for (const auto& n : names) rep.graphs.push_back(make_record(n, opt));
    if (with_global) rep.global = global_checks(opt);
  }
  return rep;
}

Json rational_json(const Rational& r) { return r.fraction(); }

Json measure_json(const measures::CycloMeasure& m) {
  Json j = Json::object();
  for (const auto& [atom, c] : m.terms()) j[atom.str()] = rational_json(c);
  return j;
}

namespace {

Json coefficients_json(const algebra::Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(rational_json(c));
  return a;
}

Json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json j = Json::object();
  for (const auto& c : checks) j[c.name] = c.ok;
  return j;
}

Json failures_json(const std::vector<CheckResult>& checks) {
  Json j = Json::object();
  for (const auto& c : checks)
    if (!c.ok) j[c.name] = c.detail;
  return j;
}

}  // namespace

Json ratfun_json(const RationalFunction& f) {
  Json j;
  j["num"] = coefficients_json(f.num());
  j["den"] = coefficients_json(f.den());
  if (auto pf = recursion::product_form(f)) {
    j["factored"] = pf->str();
    Json fs = Json::array();
    for (auto [d, e] : pf->exponents) fs.push_back(Json::array({d, e}));
    j["factors"] = fs;
    j["constant"] = rational_json(pf->constant);
  } else {
    j["factored"] = nullptr;
  }
  return j;
}

Json decomposition_json(const cyclotomic::Decomposition& d, const cyclotomic::SystemMatrix* sys) {
  Json j;
  j["period"] = d.period;
  j["feasible"] = d.feasible;
  if (d.feasible) {
    j["coefficients"] = measure_json(d.coefficients);
    j["solver_coefficients"] = measure_json(d.solver_coefficients);
    j["reexpressed"] = d.reexpressed;
    j["nullity"] = d.nullity;
    Json basis = Json::array();
    for (const auto& b : d.basis) basis.push_back(b.label());
    Json ns = Json::array();
    for (const auto& v : d.null_space) {
      Json row = Json::object();
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) row[d.basis[i].label()] = rational_json(v[i]);
      ns.push_back(row);
    }
    j["null_space"] = ns;
    if (d.catalog_match) j["catalog_match"] = *d.catalog_match;
    return j;
  }
  Json w;
  Json lambda = Json::object();
  for (auto k : d.witness->support()) lambda["c" + std::to_string(k)] = rational_json(d.witness->lambda[k]);
  w["lambda"] = lambda;
  if (sys) {
    Json rows = Json::object();
    for (std::size_t i = 0; i < sys->basis.size(); ++i) {
      Rational s;
      for (std::size_t k = 0; k < sys->columns(); ++k) s += d.witness->lambda[k] * sys->reduced[i][k];
      rows[sys->basis[i].label()] = rational_json(s);
    }
    Rational rhs;
    for (std::size_t k = 0; k < sys->columns(); ++k) rhs += d.witness->lambda[k] * sys->reduced_rhs[k];
    w["rows"] = rows;
    w["rhs"] = rational_json(rhs);
    w["verified"] = cyclotomic::verify_witness(*sys, *d.witness);
  }
  j["witness"] = w;
  return j;
}

Json record_json(const GraphRecord& r) {
  Json j;
  j["graph"] = r.name.str();
  Json loops = Json::array();
  for (const auto& l : r.loops) loops.push_back(integer_json(l));
  j["loops"] = loops;
  j["t_series"] = ratfun_json(r.t_series);
  if (r.measure) j["measure"] = measure_json(*r.measure);
  else j["measure"] = Json{{"cyclotomic", false}};
  if (r.decomposition) {
    std::optional<cyclotomic::SystemMatrix> sys;
    if (!r.decomposition->feasible)
      sys = cyclotomic::build_system(cyclotomic::make_problem(r.t_series, r.decomposition->period));
    j["decomposition"] = decomposition_json(*r.decomposition, sys ? &*sys : nullptr);
  } else {
    j["decomposition"] = nullptr;
  }
  j["checks"] = checks_json(r.checks);
  j["failures"] = failures_json(r.checks);
  j["ok"] = r.ok();
  j["elapsed_us"] = static_cast<std::int64_t>(r.elapsed_ms * 1000);
  return j;
}

Json report_json(const Report& r) {
  Json j;
  j["schema"] = "1";
  Json gs = Json::array();
  for (const auto& g : r.graphs) gs.push_back(record_json(g));
  j["graphs"] = gs;
  if (!r.global.empty()) {
    j["global_checks"] = checks_json(r.global);
    j["global_failures"] = failures_json(r.global);
    j["ok"] = r.ok();
  }
  return j;
}

std::string emit_json(const Report& r) { return report_json(r).dump() + "\n"; }

std::string render_table(const Report& r) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& g : r.graphs) width = std::max(width, g.name.str().size());
  for (const auto& g : r.graphs) {
    std::string name = g.name.str();
    os << name << std::string(width - name.size() + 2, ' ') << (g.ok() ? "ok  " : "FAIL")
       << "  T = " << (g.t_factors ? g.t_factors->str() : g.t_series.str()) << "\n";
    os << std::string(width + 8, ' ') << "measure: "
       << (g.measure ? g.measure->str() : std::string("not cyclotomic")) << "\n";
    if (g.decomposition) {
      const auto& d = *g.decomposition;
      os << std::string(width + 8, ' ') << "decomposition: "
         << (d.feasible ? "feasible" : "infeasible") << " (period " << d.period << ")";
      if (d.feasible && d.reexpressed) os << ", solver gives " << d.solver_coefficients.str();
      os << "\n";
    }
    for (const auto& c : g.checks)
      if (!c.ok) os << std::string(width + 8, ' ') << "failed " << c.name << ": " << c.detail << "\n";
  }
  if (!r.global.empty()) {
    std::size_t passed = 0;
    for (const auto& c : r.global) passed += c.ok;
    os << "global checks: " << passed << "/" << r.global.size() << " passed\n";
    for (const auto& c : r.global)
      if (!c.ok) os << "  failed " << c.name << ": " << c.detail << "\n";
  }
  return os.str();
}

}  // namespace adespec::app
