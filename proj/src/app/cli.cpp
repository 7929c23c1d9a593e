#include "adespec/app/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "adespec/app/report.hpp"
#include "adespec/error.hpp"
#include "adespec/graphs/graph.hpp"
#include "adespec/recursion/tails.hpp"
#include "adespec/series/jones.hpp"

namespace adespec::app {

using algebra::Rational;
using algebra::RationalFunction;
using graphs::GraphName;

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string coefficient_list(const algebra::PowerSeries& s) {
  std::vector<std::string> parts;
  for (const auto& c : s.coefficients()) parts.push_back(c.str());
  return join(parts, ", ");
}

std::string factored(const RationalFunction& f, const std::string& var) {
  if (var == "q")
    if (auto pf = recursion::product_form(f)) return pf->str();
  return f.str(var);
}

int usage(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  return exit_usage;
}

struct Options {
  std::string graph;
  std::vector<std::string> graphs;
  bool all = false;
  std::size_t k_max = 20;
  std::size_t order = 20;
  std::string kind = "t";
  std::string format = "table";
  std::string measure;
  long perturb_theta = 0;
  long period = 0;
  long family_k = 0;
  bool weights = false;
  int digits = 20;
  bool serial = false;
};

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& n : graphs::full_catalog()) {
      const auto e = measures::catalog_measure(n);
      Json rec;
      rec["graph"] = n.str();
      rec["measure"] = e.measure ? measure_json(*e.measure) : Json{{"cyclotomic", false}};
      rec["t_series"] = ratfun_json(e.t_series);
      j.push_back(rec);
    }
    out << j.dump() << "\n";
    return exit_ok;
  }
  out << "family rules:\n"
         "  A(n)        αd_{n+1}\n"
         "  D(n+1)      2αd_{2n} - αd_n\n"
         "  A1ext(2n)   d_n\n"
         "  D1ext(n+2)  d_2 - d_1/2 + d_n/2\n"
         "  AInf        αd\n"
         "  AZZ         d\n"
         "  DInf        d_2 - d_1/2 + d/2\n\n";
  for (const auto& n : graphs::full_catalog()) {
    const auto e = measures::catalog_measure(n);
    std::string name = n.str();
    out << name << std::string(12 - std::min<std::size_t>(11, name.size()), ' ');
    if (e.measure) out << e.measure->str() << "\n";
    else out << "not cyclotomic, T = " << factored(e.t_series, "q") << "\n";
  }
  return exit_ok;
}

int cmd_loops(const Options& o, std::ostream& out) {
  const auto name = GraphName::parse(o.graph);
  const auto g = name.is_symbolic() ? graphs::truncate_infinite(name, 2 * o.k_max + 2)
                                    : graphs::build_graph(name);
  std::vector<std::string> parts;
  for (const auto& l : graphs::loop_counts(g, o.k_max)) parts.push_back(l.get_str());
  out << join(parts, ", ") << "\n";
  return exit_ok;
}

int cmd_series(const Options& o, std::ostream& out, std::ostream& err) {
  const auto name = GraphName::parse(o.graph);
  RationalFunction f;
  std::string var = "q", label;
  if (name.is_symbolic()) {
    if (o.kind == "poincare") return usage(err, name.str() + " has no finite resolvent");
    const auto t = measures::catalog_measure(name).t_series;
    f = o.kind == "t" ? t : series::theta_from_t(t);
  } else {
    const auto p = series::poincare_resolvent(graphs::decompose(graphs::build_graph(name)));
    if (o.kind == "poincare") {
      f = p;
      var = "z";
    } else {
      const auto theta = series::jones_theta(p);
      f = o.kind == "theta" ? theta : series::t_series(theta);
    }
  }
  label = o.kind == "poincare" ? "f(z)" : (o.kind == "theta" ? "Theta(q)" : "T(q)");
  out << label << " = " << factored(f, var) << "\n";
  if (var == "q" && !recursion::product_form(f))
    out << "greedy factors: " << recursion::str(recursion::cyclotomic_simplify(f)) << "\n";
  out << "coefficients: " << coefficient_list(f.series_expand(o.order)) << "\n";
  return exit_ok;
}

int cmd_measure(const Options& o, std::ostream& out) {
  const auto name = GraphName::parse(o.graph);
  const auto e = measures::catalog_measure(name);
  if (!e.measure) {
    out << name.str() << ": not cyclotomic\nT(q) = " << factored(e.t_series, "q") << "\n";
    return exit_ok;
  }
  out << name.str() << ": " << e.measure->str() << "\n";
  out << "T(q) = " << factored(e.t_series, "q") << "\n";
  if (o.weights) {
    for (const auto& w : measures::point_weights(*e.measure, o.digits))
      out << "  exp(i pi " << w.numerator << "/" << w.denominator << ")  " << w.decimal
          << "  (uniform part " << w.uniform_mass.str() << ")\n";
    for (const auto& [atom, c] : e.measure->terms())
      if (atom.kind == measures::MeasureAtom::Kind::UniformCircle ||
          atom.kind == measures::MeasureAtom::Kind::AlphaCircle)
        out << "  continuous part " << c.str() << " " << atom.short_str() << "\n";
  }
  return exit_ok;
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.k_max = o.k_max;
  if (!o.measure.empty()) v.measure_override = measures::CycloMeasure::parse(o.measure);
  if (o.perturb_theta != 0) v.perturb_theta = o.perturb_theta;
  return v;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.graph.empty() && !o.all) return usage(err, "verify needs a graph name or --all");
  const auto start = std::chrono::steady_clock::now();
  std::vector<GraphName> names;
  if (o.all) names = graphs::full_catalog();
  else names.push_back(GraphName::parse(o.graph));
  const auto rep = make_report(names, verify_options(o), !o.serial, o.all);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::size_t global_passed = 0;
  std::vector<std::string> failed;
  for (const auto& c : rep.global) {
    global_passed += c.ok;
    if (!c.ok) failed.push_back(c.name);
  }
  std::size_t passed = global_passed;
  for (const auto& g : rep.graphs) {
    std::size_t ok = 0;
    for (const auto& c : g.checks) {
      ok += c.ok;
      if (!c.ok) {
        failed.push_back(g.name.str() + ":" + c.name);
        out << "FAIL " << g.name.str() << " " << c.name << ": " << c.detail << "\n";
      }
    }
    out << g.name.str() << ": " << ok << "/" << g.checks.size() << " checks passed\n";
    passed += ok;
  }
  for (const auto& c : rep.global)
    if (!c.ok) out << "FAIL " << c.name << ": " << c.detail << "\n";
  if (!rep.global.empty())
    out << "global: " << global_passed << "/" << rep.global.size() << " checks passed\n";
  std::ostringstream time;
  time.precision(1);
  time << std::fixed << ms;
  if (failed.empty()) {
    out << "verification passed: " << passed << " checks in " << time.str() << " ms\n";
    return exit_ok;
  }
  out << "verification FAILED: " << join(failed, ", ") << " (" << time.str() << " ms)\n";
  return exit_failed;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto name = GraphName::parse(o.graph);
  std::optional<long> period;
  if (o.period > 0) period = o.period;
  const auto d = cyclotomic::decompose_graph(name, period);
  const auto t = series::t_series(
      series::jones_theta(series::poincare_resolvent(graphs::decompose(graphs::build_graph(name)))));
  const auto sys = cyclotomic::build_system(cyclotomic::make_problem(t, d.period));
  if (o.format == "json") {
    Json j;
    j["graph"] = name.str();
    j["decomposition"] = decomposition_json(d, &sys);
    out << j.dump() << "\n";
    return d.feasible || d.witness ? exit_ok : exit_internal;
  }
  if (d.feasible) {
    out << "feasible (period " << d.period << ")\n";
    for (const auto& [atom, c] : d.coefficients.terms())
      out << "  " << atom.str() << ": " << c.str() << "\n";
    if (d.reexpressed) out << "solver solution: " << d.solver_coefficients.str() << "\n";
    out << "null space dimension: " << d.nullity << "\n";
    return exit_ok;
  }
  out << "infeasible (period " << d.period << ")\n";
  std::vector<std::string> terms;
  for (auto k : d.witness->support())
    terms.push_back(d.witness->lambda[k].str() + "*c" + std::to_string(k));
  out << "witness: " << join(terms, " + ") << "\n";
  const bool ok = cyclotomic::verify_witness(sys, *d.witness);
  out << "witness " << (ok ? "verified" : "DOES NOT VERIFY")
      << ": every P_n, Q_m row gives 0, the target row gives 1\n";
  return ok ? exit_ok : exit_internal;
}

int cmd_family(const Options& o, std::ostream& out) {
  if (o.graph.empty()) {
    for (const auto& s : recursion::named_seeds()) {
      const auto fam = recursion::tail_family(s.L0, s.kind);
      out << s.name << "  " << s.family << "  " << recursion::to_string(s.kind)
          << "  P = " << fam.P.str() << "\n";
    }
    return exit_ok;
  }
  const auto& s = recursion::find_seed(o.graph);
  const auto fam = recursion::tail_family(s.L0, s.kind);
  const auto theta = recursion::family_theta(fam, o.family_k);
  out << s.name << " (" << s.family << ", " << recursion::to_string(s.kind) << ")\n"
      << "P0 = " << fam.P0.str() << "\nP1 = " << fam.P1.str() << "\nP = " << fam.P.str() << "\n"
      << "k = " << o.family_k << ": " << s.member(o.family_k).str()
      << ", T(q) = " << factored(series::t_series(theta), "q") << "\n";
  return exit_ok;
}

int cmd_report(const Options& o, std::ostream& out) {
  std::vector<GraphName> names;
  if (o.all) names = graphs::full_catalog();
  for (const auto& g : o.graphs) names.push_back(GraphName::parse(g));
  const auto rep = make_report(names, verify_options(o), !o.serial, o.all);
  out << (o.format == "json" ? emit_json(rep) : render_table(rep));
  return rep.ok() ? exit_ok : exit_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral measures, series and cyclotomic decompositions of ADE-type graphs",
               "adespec"};
  app.require_subcommand(1);
  Options o;

  auto* catalog = app.add_subcommand("catalog", "List catalog graphs with their measures");
  catalog->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));

  auto* loops = app.add_subcommand("loops", "Loop counts loop(0), loop(2), ..., loop(2K)");
  loops->add_option("graph", o.graph)->required();
  loops->add_option("--max-k", o.k_max);

  auto* ser = app.add_subcommand("series", "Poincare, Theta or T series");
  ser->add_option("graph", o.graph)->required();
  ser->add_option("--kind", o.kind)->check(CLI::IsMember({"poincare", "theta", "t"}));
  ser->add_option("--order", o.order);

  auto* meas = app.add_subcommand("measure", "Catalog measure of a graph");
  meas->add_option("graph", o.graph)->required();
  meas->add_flag("--weights", o.weights, "Print point weights on roots of unity");
  meas->add_option("--digits", o.digits)->check(CLI::Range(1, 200));

  auto* ver = app.add_subcommand("verify", "Run the verification checks");
  ver->add_option("graph", o.graph);
  ver->add_flag("--all", o.all);
  ver->add_option("--max-k", o.k_max);
  ver->add_option("--measure", o.measure, "Use this measure instead of the catalog one");
  ver->add_option("--perturb-theta", o.perturb_theta, "Add q^K to Theta before checking");
  ver->add_flag("--serial", o.serial);

  auto* dec = app.add_subcommand("decompose", "Decompose T over the divisor basis");
  dec->add_option("graph", o.graph)->required();
  dec->add_option("--period", o.period);
  dec->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));

  auto* fam = app.add_subcommand("family", "Tail-recursion families by seed name");
  fam->add_option("seed", o.graph);
  fam->add_option("--k", o.family_k);

  auto* rep = app.add_subcommand("report", "Full report");
  rep->add_option("graphs", o.graphs);
  rep->add_flag("--all", o.all);
  rep->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));
  rep->add_option("--max-k", o.k_max);
  rep->add_flag("--serial", o.serial);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return exit_usage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(o, out);
    if (loops->parsed()) return cmd_loops(o, out);
    if (ser->parsed()) return cmd_series(o, out, err);
    if (meas->parsed()) return cmd_measure(o, out);
    if (ver->parsed()) return cmd_verify(o, out, err);
    if (dec->parsed()) return cmd_decompose(o, out);
    if (fam->parsed()) return cmd_family(o, out);
    if (rep->parsed()) return cmd_report(o, out);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::parse:
      case ErrorKind::range:
      case ErrorKind::catalog:
      case ErrorKind::not_finite:
      case ErrorKind::type:
      case ErrorKind::shape:
      case ErrorKind::period:
        return usage(err, e.what());
      default:
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return usage(err, "no command given");
}

}  // namespace adespec::app
