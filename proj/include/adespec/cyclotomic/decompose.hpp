#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adespec/algebra/ratfun.hpp"
#include "adespec/graphs/graph_name.hpp"
#include "adespec/measures/measure.hpp"

namespace adespec::cyclotomic {

using algebra::Poly;
using algebra::Rational;
using algebra::RationalFunction;
using measures::CycloMeasure;
using measures::MeasureAtom;

/// A basis row: P_n stands for d_n, Q_m for alpha d_m.
struct BasisElement {
  enum class Kind { P, Q };
  Kind kind;
  long n;

  MeasureAtom atom() const;
  std::string label() const;  // "P_6", "Q_2"
  bool operator==(const BasisElement&) const = default;
};

/// d_n for every n | N, then alpha d_m for every m | N with m >= 2, each in
/// ascending order.
std::vector<BasisElement> divisor_basis(long period);

struct DecompositionProblem {
  RationalFunction target_t;
  long period = 0;
  std::vector<BasisElement> basis;
};

DecompositionProblem make_problem(const RationalFunction& target_t, long period);

struct SystemMatrix {
  long period = 0;
  std::vector<BasisElement> basis;
  std::vector<Poly> rows;  // (1-q)(1-q^N) T(atom), one per basis element
  Poly rhs;                // (1-q)(1-q^N) target
  /// rows restricted to the columns c_0 .. c_{N/2}; reduced[i][k] is the
  /// coefficient of q^k in rows[i].
  std::vector<std::vector<Rational>> reduced;
  std::vector<Rational> reduced_rhs;

  std::size_t columns() const { return reduced_rhs.size(); }
};

/// Throws Error(period) when (1-q)(1-q^N) target is not a polynomial of
/// degree <= N, Error(consistency) when a row or the right-hand side is not
/// palindromic of nominal degree N.
SystemMatrix build_system(const DecompositionProblem& p);

/// lambda over the equations c_0 .. c_{N/2} with sum_k lambda_k row_i[c_k] = 0
/// for every basis row and sum_k lambda_k rhs[c_k] = 1.
struct Witness {
  std::vector<Rational> lambda;
  std::vector<std::size_t> support() const;
};

struct Decomposition {
  bool feasible = false;
  long period = 0;
  /// Coefficients reported for the target. For catalog graphs this is the
  /// catalog measure once it has been checked to solve the system; otherwise
  /// it equals solver_coefficients.
  CycloMeasure coefficients;
  /// Reduced-row-echelon solution with every free variable set to 0.
  CycloMeasure solver_coefficients;
  std::vector<BasisElement> basis;
  std::vector<Rational> solution;  // solver_coefficients, per basis element
  std::size_t nullity = 0;
  std::vector<std::vector<Rational>> null_space;
  std::optional<Witness> witness;
  bool reexpressed = false;
  std::optional<bool> catalog_match;  // set by decompose_graph when a catalog measure exists
};

/// Exact elimination. An infeasible system yields a witness of minimal
/// support among those with at most four equations, or the elimination
/// witness when no small one exists.
Decomposition solve(const SystemMatrix& sys);

/// Direct check of lambda^t A = 0 and lambda^t b = 1 on the reduced columns.
bool verify_witness(const SystemMatrix& sys, const Witness& w);

/// True when coeffs (atoms from the basis only) solve the reduced system.
bool solves(const SystemMatrix& sys, const CycloMeasure& coeffs);

/// Smallest N <= bound with (1-q)(1-q^N) t a polynomial of degree <= N.
/// Throws Error(period) when there is none.
long infer_period(const RationalFunction& t, long bound = 120);

/// The T-series of a finite catalog graph through the resolvent pipeline,
/// decomposed at the inferred period (or the given one). Throws
/// Error(not_finite) for symbolic names.
Decomposition decompose_graph(const graphs::GraphName& name,
                              std::optional<long> period = std::nullopt);

}  // namespace adespec::cyclotomic
