#include "adespec/cyclotomic/decompose.hpp"

#include <functional>

#include "adespec/error.hpp"
#include "adespec/graphs/graph.hpp"
#include "adespec/series/jones.hpp"

namespace adespec::cyclotomic {

using Row = std::vector<Rational>;

MeasureAtom BasisElement::atom() const {
  return kind == Kind::P ? MeasureAtom::uniform_roots(n) : MeasureAtom::alpha_roots(n);
}

std::string BasisElement::label() const {
  return (kind == Kind::P ? "P_" : "Q_") + std::to_string(n);
}

std::vector<std::size_t> Witness::support() const {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (!lambda[k].is_zero()) s.push_back(k);
  return s;
}

std::vector<BasisElement> divisor_basis(long period) {
  if (period < 1) fail(ErrorKind::range, "period must be positive");
  std::vector<BasisElement> b;
  for (long n = 1; n <= period; ++n)
    if (period % n == 0) b.push_back({BasisElement::Kind::P, n});
  for (long m = 2; m <= period; ++m)
    if (period % m == 0) b.push_back({BasisElement::Kind::Q, m});
  return b;
}

DecompositionProblem make_problem(const RationalFunction& target_t, long period) {
  return {target_t, period, divisor_basis(period)};
}

namespace {

// (1-q)(1-q^N) f as a polynomial of degree <= N, or nullopt.
std::optional<Poly> cleared(const RationalFunction& f, long period) {
  const auto N = static_cast<std::size_t>(period);
  const Poly scale = Poly::one_minus_power(1) * Poly::one_minus_power(N);
  const Poly num = f.num() * scale;
  if (!num.divisible_by(f.den())) return std::nullopt;
  Poly r = num.exact_div(f.den());
  if (!r.is_zero() && r.degree().value() > N) return std::nullopt;
  return r;
}

Row restrict(const Poly& p, std::size_t columns) {
  Row r(columns);
  for (std::size_t k = 0; k < columns; ++k) r[k] = p[k];
  return r;
}

// Reduced row echelon form of m, pivoting only in the first `pivot_cols`
// columns. Returns the pivot column of each leading row.
std::vector<std::size_t> rref(std::vector<Row>& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Looks for lambda on the given equations with lambda^t E = 0 and
// lambda^t b = 1, by eliminating [E | b | I].
std::optional<Row> farkas(const std::vector<Row>& eqs, const Row& rhs,
                          const std::vector<std::size_t>& subset, std::size_t unknowns) {
  const std::size_t s = subset.size();
  std::vector<Row> m;
  for (std::size_t i = 0; i < s; ++i) {
    Row row = eqs[subset[i]];
    row.push_back(rhs[subset[i]]);
    for (std::size_t j = 0; j < s; ++j) row.push_back(i == j ? 1 : 0);
    m.push_back(std::move(row));
  }
  const auto pivots = rref(m, unknowns);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    const Rational b = m[r][unknowns];
    if (b.is_zero()) continue;
    Row lambda(eqs.size());
    for (std::size_t j = 0; j < s; ++j) lambda[subset[j]] = m[r][unknowns + 1 + j] / b;
    return lambda;
  }
  return std::nullopt;
}

std::optional<Row> sparse_farkas(const std::vector<Row>& eqs, const Row& rhs,
                                 std::size_t unknowns, std::size_t max_support) {
  const std::size_t m = eqs.size();
  std::vector<std::size_t> subset;
  std::optional<Row> found;
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start,
                                                             std::size_t left) {
    if (left == 0) {
      found = farkas(eqs, rhs, subset, unknowns);
      return found.has_value();
    }
    for (std::size_t i = start; i + left <= m; ++i) {
      subset.push_back(i);
      if (choose(i + 1, left - 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  for (std::size_t s = 1; s <= std::min(max_support, m); ++s)
    if (choose(0, s)) return found;
  return std::nullopt;
}

CycloMeasure to_measure(const std::vector<BasisElement>& basis, const Row& x) {
  CycloMeasure m;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!x[i].is_zero()) m.add(basis[i].atom(), x[i]);
  return m;
}

// Equations: one per reduced column, unknowns: one per basis element.
std::vector<Row> equations(const SystemMatrix& sys) {
  std::vector<Row> eqs(sys.columns(), Row(sys.basis.size()));
  for (std::size_t i = 0; i < sys.basis.size(); ++i)
    for (std::size_t k = 0; k < sys.columns(); ++k) eqs[k][i] = sys.reduced[i][k];
  return eqs;
}

}  // namespace

SystemMatrix build_system(const DecompositionProblem& p) {
  const long N = p.period;
  SystemMatrix sys;
  sys.period = N;
  sys.basis = p.basis;
  auto target = cleared(p.target_t, N);
  if (!target)
    fail(ErrorKind::period, "(1-q)(1-q^" + std::to_string(N) +
                                ") T is not a polynomial of degree <= " + std::to_string(N));
  sys.rhs = *target;
  const auto nominal = static_cast<std::size_t>(N);
  const std::size_t columns = nominal / 2 + 1;
  for (const auto& b : p.basis) {
    auto row = cleared(measures::measure_t_series(b.atom()), N);
    if (!row) fail(ErrorKind::consistency, b.label() + " is not a polynomial for this period");
    if (!row->is_palindromic(nominal))
      fail(ErrorKind::consistency, b.label() + " is not palindromic of degree " + std::to_string(N));
    sys.reduced.push_back(restrict(*row, columns));
    sys.rows.push_back(std::move(*row));
  }
  if (!sys.rhs.is_palindromic(nominal))
    fail(ErrorKind::consistency,
         "target is not palindromic of degree " + std::to_string(N) + "; wrong period?");
  sys.reduced_rhs = restrict(sys.rhs, columns);
  return sys;
}

Decomposition solve(const SystemMatrix& sys) {
  const std::size_t n = sys.basis.size();
  const auto eqs = equations(sys);
  Decomposition d;
  d.period = sys.period;
  d.basis = sys.basis;

  std::vector<Row> m = eqs;
  for (std::size_t k = 0; k < m.size(); ++k) m[k].push_back(sys.reduced_rhs[k]);
  const auto pivots = rref(m, n);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (m[r][n].is_zero()) continue;
    auto lambda = sparse_farkas(eqs, sys.reduced_rhs, n, 4);
    if (!lambda) {
      std::vector<std::size_t> all(eqs.size());
      for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
      lambda = farkas(eqs, sys.reduced_rhs, all, n);
    }
    if (!lambda) fail(ErrorKind::consistency, "inconsistent system without a certificate");
    d.witness = Witness{*lambda};
    return d;
  }

  d.feasible = true;
  d.solution.assign(n, Rational());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    d.solution[pivots[r]] = m[r][n];
    is_pivot[pivots[r]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Row v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    d.null_space.push_back(std::move(v));
  }
  d.nullity = d.null_space.size();
  d.solver_coefficients = to_measure(sys.basis, d.solution);
  d.coefficients = d.solver_coefficients;
  return d;
}

bool verify_witness(const SystemMatrix& sys, const Witness& w) {
  if (w.lambda.size() != sys.columns()) return false;
  for (const auto& row : sys.reduced) {
    Rational s;
    for (std::size_t k = 0; k < row.size(); ++k) s += w.lambda[k] * row[k];
    if (!s.is_zero()) return false;
  }
  Rational s;
  for (std::size_t k = 0; k < sys.columns(); ++k) s += w.lambda[k] * sys.reduced_rhs[k];
  return s == Rational(1);
}

bool solves(const SystemMatrix& sys, const CycloMeasure& coeffs) {
  Row x(sys.basis.size());
  for (const auto& [atom, c] : coeffs.terms()) {
    bool placed = false;
    for (std::size_t i = 0; i < sys.basis.size(); ++i)
      if (sys.basis[i].atom() == atom) {
        x[i] = c;
        placed = true;
      }
    if (!placed) return false;
  }
  for (std::size_t k = 0; k < sys.columns(); ++k) {
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * sys.reduced[i][k];
    if (s != sys.reduced_rhs[k]) return false;
  }
  return true;
}

long infer_period(const RationalFunction& t, long bound) {
  for (long N = 1; N <= bound; ++N)
    if (cleared(t, N)) return N;
  fail(ErrorKind::period, "T-series " + t.str() + " has no period up to " + std::to_string(bound));
}

Decomposition decompose_graph(const graphs::GraphName& name, std::optional<long> period) {
  const auto g = graphs::build_graph(name);
  const auto t = series::t_series(series::jones_theta(
      series::poincare_resolvent(graphs::decompose(g))));
  const long N = period ? *period : infer_period(t);
  const auto sys = build_system(make_problem(t, N));
  auto d = solve(sys);
  if (!d.feasible) return d;
  std::optional<measures::MeasureCatalogEntry> entry;
  try {
    entry = measures::catalog_measure(name);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::catalog) throw;
  }
  if (entry && entry->measure) {
    d.catalog_match = solves(sys, *entry->measure);
    if (*d.catalog_match) {
      d.coefficients = *entry->measure;
      d.reexpressed = !(d.coefficients == d.solver_coefficients);
    }
  }
  return d;
}

}  // namespace adespec::cyclotomic
