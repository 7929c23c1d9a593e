#include "adespec/app/checks.hpp"

#include <functional>

#include "adespec/algebra/matrix.hpp"
#include "adespec/cyclotomic/decompose.hpp"
#include "adespec/error.hpp"
#include "adespec/graphs/graph.hpp"
#include "adespec/recursion/tails.hpp"
#include "adespec/series/jones.hpp"

namespace adespec::app {

using algebra::BigInt;
using algebra::LaurentPoly;
using algebra::Poly;
using algebra::Rational;
using algebra::RationalFunction;
using graphs::GraphName;
using measures::CycloMeasure;
using measures::MeasureAtom;

namespace {

class Collector {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    out_.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::vector<CheckResult> out_;
};

std::string at_k(long k) { return "first mismatch at k=" + std::to_string(k); }

std::optional<measures::MeasureCatalogEntry> try_catalog(const GraphName& name) {
  try {
    return measures::catalog_measure(name);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::catalog) throw;
    return std::nullopt;
  }
}

// T from the measure, against the moment route (exact and truncated).
bool t_paths_agree(const CycloMeasure& m, std::size_t order, std::string& detail) {
  const RationalFunction t = measures::measure_t_series(m);
  const RationalFunction exact = series::t_from_stieltjes(measures::stieltjes_transform(m));
  if (!algebra::ratfun_equal(t, exact)) {
    detail = "exact Stieltjes route gives " + exact.str();
    return false;
  }
  const auto truncated = series::t_from_stieltjes(measures::stieltjes_series(m, order));
  if (!(truncated == t.series_expand(truncated.order()))) {
    detail = "truncated Stieltjes route disagrees";
    return false;
  }
  return true;
}

void finite_checks(const GraphName& name, const VerifyOptions& opt, Collector& c) {
  const std::size_t K = opt.k_max;
  const std::size_t order = 2 * K;
  const auto g = graphs::build_graph(name);
  const auto loops = graphs::loop_counts(g, K);

  {
    const auto walks = graphs::walk_counts(g, order);
    auto power = algebra::IntMatrix::identity(g.vertex_count());
    long bad = -1;
    for (std::size_t l = 0; l <= order && bad < 0; ++l) {
      if (power(0, 0) != walks[l]) bad = static_cast<long>(l);
      power = power * g.adjacency();
    }
    c.add("graphs.walk_oracle", bad < 0, "walk count differs from matrix power at length " +
                                             std::to_string(bad));
  }

  auto bundle = series::make_bundle(g, order);
  if (opt.perturb_theta)
    bundle.theta = bundle.theta + RationalFunction::power(*opt.perturb_theta);

  {
    const auto f = bundle.poincare.series_expand(K);
    long bad = -1;
    for (std::size_t k = 0; k <= K && bad < 0; ++k)
      if (f[k] != Rational(loops[k])) bad = static_cast<long>(k);
    c.add("series.resolvent_loops", bad < 0, at_k(bad));
  }
  {
    const auto d = graphs::decompose(g);
    const Poly full = algebra::det_one_minus_x(d.L);
    c.add("series.cramer_structure", full.divisible_by(bundle.poincare.den()),
          "denominator of f does not divide det(1 - zL)");
  }
  {
    const bool ok = algebra::ratfun_equal(series::theta_from_t(bundle.t_series), bundle.theta) &&
                    bundle.theta.evaluate(0) == Rational(1) &&
                    bundle.t_series.evaluate(0) == Rational(1);
    c.add("series.t_definition", ok, "T != (Theta - q)/(1 - q) or Theta(0) != 1");
  }
  c.add("series.stieltjes_links", series::verify_stieltjes_links(bundle, order),
        "sigma(z) != f(z^2) or 2S(q) != Theta(q^2) - q^2 + 1 through order " +
            std::to_string(order));

  const auto entry = try_catalog(name);
  if (entry)
    c.add("series.closed_form", algebra::ratfun_equal(bundle.t_series, entry->t_series),
          "pipeline T " + bundle.t_series.str() + " differs from " + entry->t_series.str());

  std::optional<CycloMeasure> measure = opt.measure_override;
  if (!measure && entry) measure = entry->measure;
  if (measure) {
    auto mc = measures::verify_measure(g, *measure, K);
    c.add("measures.moments", mc.ok,
          at_k(mc.failing_k) + ": moment " + mc.expected.str() + " vs loop " +
              mc.actual.get_str());
    std::string detail;
    c.add("measures.t_paths", t_paths_agree(*measure, order, detail), detail);
    c.add("measures.mass", measure->mass() == Rational(1), "total mass " + measure->mass().str());
  } else if (entry) {
    const auto rebuilt = measures::loops_from_t(entry->t_series, K);
    long bad = -1;
    for (std::size_t k = 0; k <= K && bad < 0; ++k)
      if (rebuilt[k] != Rational(loops[k])) bad = static_cast<long>(k);
    c.add("measures.moments_from_t", bad < 0, at_k(bad));
  }

  if (!entry) return;
  const auto d = cyclotomic::decompose_graph(name);
  c.add("cyclotomic.feasibility", d.feasible == entry->cyclotomic(),
        d.feasible ? "decomposes although not cyclotomic" : "no decomposition found");
  const auto sys = cyclotomic::build_system(cyclotomic::make_problem(bundle.t_series, d.period));
  if (d.feasible) {
    const bool sound =
        algebra::ratfun_equal(measures::measure_t_series(d.solver_coefficients), bundle.t_series) &&
        algebra::ratfun_equal(measures::measure_t_series(d.coefficients), bundle.t_series);
    c.add("cyclotomic.soundness", sound, "coefficients do not reproduce T");
    c.add("cyclotomic.mass", d.solver_coefficients.mass() == Rational(1),
          "solver coefficients have mass " + d.solver_coefficients.mass().str());
    c.add("cyclotomic.catalog_match", d.catalog_match.value_or(false),
          "catalog measure does not solve the system");
    bool kernel = true;
    for (const auto& v : d.null_space) {
      CycloMeasure shifted = d.solver_coefficients;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) shifted.add(d.basis[i].atom(), v[i]);
      kernel = kernel && cyclotomic::solves(sys, shifted);
    }
    c.add("cyclotomic.null_space", kernel, "a null-space vector changes the target");
  } else {
    c.add("cyclotomic.witness", d.witness && cyclotomic::verify_witness(sys, *d.witness),
          "infeasibility witness does not verify");
  }
}

void symbolic_checks(const GraphName& name, const VerifyOptions& opt, Collector& c) {
  const std::size_t K = opt.k_max;
  const auto entry = measures::catalog_measure(name);
  const CycloMeasure m = opt.measure_override ? *opt.measure_override : *entry.measure;

  auto mc = measures::verify_measure(name, m, K);
  c.add("measures.moments", mc.ok,
        at_k(mc.failing_k) + ": moment " + mc.expected.str() + " vs loop " + mc.actual.get_str());

  const auto small = graphs::loop_counts(graphs::truncate_infinite(name, 2 * K + 2), K);
  const auto large = graphs::loop_counts(graphs::truncate_infinite(name, 2 * K + 4), K);
  c.add("graphs.truncation_window", small == large, "truncation is not stable at size 2K+2");

  if (name.tag == graphs::GraphTag::AInf || name.tag == graphs::GraphTag::AZZ) {
    long bad = -1;
    for (std::size_t j = 0; j <= K && bad < 0; ++j) {
      const BigInt want = name.tag == graphs::GraphTag::AInf ? algebra::catalan(j)
                                                             : algebra::binomial(2 * j, j);
      if (measures::pushforward_moment(m, static_cast<long>(2 * j)) != Rational(want))
        bad = static_cast<long>(j);
    }
    c.add(name.tag == graphs::GraphTag::AInf ? "measures.catalan" : "measures.central_binomial",
          bad < 0, at_k(bad));
  }
  std::string detail;
  c.add("measures.t_paths", t_paths_agree(m, 2 * K, detail), detail);
  c.add("measures.mass", m.mass() == Rational(1), "total mass " + m.mass().str());
}

}  // namespace

std::vector<CheckResult> graph_checks(const GraphName& name, const VerifyOptions& opt) {
  Collector c;
  if (name.is_symbolic()) symbolic_checks(name, opt, c);
  else finite_checks(name, opt, c);
  return c.take();
}

namespace {

LaurentPoly det_y(const algebra::IntMatrix& m) { return algebra::char_poly_in_q(m); }

void recursion_checks(Collector& c) {
  const LaurentPoly y = LaurentPoly::y_of_q();
  for (const auto& seed : recursion::named_seeds()) {
    const auto fam = recursion::tail_family(seed.L0, seed.kind);
    auto fc = recursion::verify_family(
        fam, [&](long k) { return graphs::build_graph(seed.member(k)); }, 5);
    c.add("recursion.family[" + seed.name + "]", fc.ok,
          "family Theta differs from the resolvent at k=" +
              std::to_string(fc.failing_k.value_or(-1)));

    const bool fork = seed.kind == recursion::TailKind::fork_tail;
    std::vector<LaurentPoly> P, Q, R;
    for (long k = 0; k <= 7; ++k) {
      P.push_back(det_y(recursion::p_matrix(fam, k)));
      Q.push_back(det_y(recursion::q_matrix(fam, k)));
      if (fork) R.push_back(det_y(recursion::r_matrix(fam, k)));
    }
    bool three_term = true;
    for (long k = 1; k <= 6; ++k) {
      three_term = three_term && P[k + 1] == (y - 2) * P[k] - P[k - 1];
      three_term = three_term && Q[k] == (y - 1) * P[k] - P[k - 1];
      if (fork) three_term = three_term && R[k] == (y - 1) * Q[k] - P[k] - (y + 1) * P[k - 1];
    }
    c.add("recursion.three_term[" + seed.name + "]", three_term,
          "determinants of the assembled matrices break the recursion");

    const auto triple = recursion::recursion_triple(fam);
    bool closed = true;
    for (long k = 0; k <= 6; ++k) {
      closed = closed && triple.p_k(k) == RationalFunction::from_laurent(P[k]);
      closed = closed && triple.q_k(k) == RationalFunction::from_laurent(Q[k]);
      if (fork) closed = closed && triple.r_k(k) == RationalFunction::from_laurent(R[k]);
    }
    c.add("recursion.closed_forms[" + seed.name + "]", closed,
          "closed-form P_k/Q_k/R_k differ from the determinants");
  }

  bool d_from_a = true;
  long bad = -1;
  auto theta = [](const GraphName& n) {
    return series::jones_theta(series::poincare_resolvent(graphs::decompose(graphs::build_graph(n))));
  };
  for (long n = 2; n <= 8 && d_from_a; ++n) {
    auto lhs = theta(GraphName::D(n + 1));
    auto rhs = RationalFunction(2) * theta(GraphName::A(2 * n - 1)) - theta(GraphName::A(n - 1));
    if (!algebra::ratfun_equal(lhs, rhs)) {
      d_from_a = false;
      bad = n;
    }
  }
  c.add("recursion.d_from_a", d_from_a, "Theta(D(n+1)) != 2 Theta(A(2n-1)) - Theta(A(n-1)) at n=" +
                                             std::to_string(bad));
}

void measure_identity_checks(Collector& c) {
  using algebra::Poly;
  bool primes = true;
  long bad = -1;
  for (long n = 1; n <= 12 && primes; ++n) {
    const auto N = static_cast<std::size_t>(n);
    const RationalFunction want_d(Poly::one_minus_power(N),
                                  Poly::one_minus_power(1) * (Poly(1) + Poly::monomial(1, N)));
    bool ok = algebra::ratfun_equal(measures::measure_t_series(measures::d_prime(n)), want_d);
    if (n >= 2) {
      const RationalFunction want_a(Poly(1) + Poly::monomial(1, N - 1),
                                    Poly(1) + Poly::monomial(1, N));
      ok = ok && algebra::ratfun_equal(measures::measure_t_series(measures::alpha_d_prime(n)),
                                       want_a);
    }
    // d'_n is uniform on the 2n points with u^{2n} = -1.
    for (long k = 0; k <= 8 * n && ok; ++k) {
      Rational want;
      if (k % (2 * n) == 0) want = (k / (2 * n)) % 2 == 0 ? 1 : -1;
      ok = measures::moment(measures::d_prime(n), k) == want;
    }
    if (!ok) {
      primes = false;
      bad = n;
    }
  }
  c.add("measures.derived_t_series", primes, "T(d'_n) or T(alpha d'_n) wrong at n=" +
                                                  std::to_string(bad));

  bool atoms = true;
  std::string detail;
  std::vector<MeasureAtom> all{MeasureAtom::uniform_circle(), MeasureAtom::alpha_circle()};
  for (long n = 1; n <= 12; ++n) {
    all.push_back(MeasureAtom::uniform_roots(n));
    if (n >= 2) all.push_back(MeasureAtom::alpha_roots(n));
  }
  for (const auto& a : all) {
    if (!t_paths_agree(CycloMeasure(a), 40, detail)) {
      atoms = false;
      detail = a.str() + ": " + detail;
      break;
    }
  }
  c.add("measures.atom_t_series", atoms, detail);

  bool symmetric = true;
  for (const auto& a : all)
    for (long k = 0; k <= 41; ++k) {
      if (k % 2 == 1 && !measures::moment(a, k).is_zero()) symmetric = false;
      if (measures::moment(a, k) != measures::moment(a, -k)) symmetric = false;
    }
  c.add("measures.even_symmetric", symmetric, "an atom has an odd or asymmetric moment");

  // (delta_i + delta_-i)/2 has moments Re(i^k).
  bool dirac = true;
  for (long k = 0; k <= 40; ++k) {
    const Rational want = k % 4 == 0 ? 1 : (k % 4 == 2 ? -1 : 0);
    dirac = dirac && measures::moment(measures::d_prime(1), k) == want;
  }
  c.add("measures.dirac_pair", dirac, "2 d_2 - d_1 is not (delta_i + delta_-i)/2");
}

void period_checks(Collector& c) {
  bool ok = true;
  long bad = -1;
  for (long n = 1; n <= 30 && ok; ++n) {
    ok = cyclotomic::infer_period(measures::measure_t_series(MeasureAtom::uniform_roots(n))) == n;
    if (n >= 2)
      ok = ok && cyclotomic::infer_period(measures::measure_t_series(MeasureAtom::alpha_roots(n))) == n;
    if (!ok) bad = n;
  }
  c.add("cyclotomic.period_inference", ok, "wrong period for the atoms with n=" + std::to_string(bad));

  bool rejects = false;
  try {
    cyclotomic::infer_period(RationalFunction(1));
  } catch (const Error& e) {
    rejects = e.kind() == ErrorKind::period;
  }
  c.add("cyclotomic.period_rejects_haar", rejects, "T = 1 was assigned a period");
}

}  // namespace

std::vector<CheckResult> global_checks(const VerifyOptions&) {
  Collector c;
  recursion_checks(c);
  measure_identity_checks(c);
  period_checks(c);
  return c.take();
}

bool all_ok(const std::vector<CheckResult>& checks) {
  for (const auto& r : checks)
    if (!r.ok) return false;
  return true;
}

}  // namespace adespec::app
