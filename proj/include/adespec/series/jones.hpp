#pragma once

#include <cstddef>
#include <vector>

#include "adespec/algebra/ratfun.hpp"
#include "adespec/graphs/graph.hpp"

namespace adespec::series {

using algebra::BigInt;
using algebra::PowerSeries;
using algebra::Rational;
using algebra::RationalFunction;

/// Poincare series f(z) = det(1 - zK) / det(1 - zL), K being L without its
/// first row and column (Cramer's rule for the (1,1) entry of the resolvent).
RationalFunction poincare_resolvent(const graphs::BipartiteDecomposition& d);

/// Theta(q) = q + (1-q)/(1+q) f(q/(1+q)^2).
RationalFunction jones_theta(const RationalFunction& poincare);

/// T(q) = (Theta(q) - q)/(1 - q).
RationalFunction t_series(const RationalFunction& theta);

/// Inverse of t_series: Theta = q + (1-q) T.
RationalFunction theta_from_t(const RationalFunction& t);

/// T-series from the Stieltjes transform S(q) of an even measure:
/// T(q) = (2 S(q^{1/2}) - 1)/(1 - q). S(q^{1/2}) is obtained by re-indexing
/// the even function S; a non-even S throws Error(consistency).
RationalFunction t_from_stieltjes(const RationalFunction& stieltjes);

/// Same, on truncated series: the result has order floor(order(S)/2).
PowerSeries t_from_stieltjes(const PowerSeries& stieltjes);

/// Symmetric circle moments m_0, m_2, ..., m_{2K} of the measure whose
/// pushforward under u + 1/u has the given even moments loop(0..2K).
std::vector<Rational> circle_moments_from_loops(const std::vector<BigInt>& loops);

/// loop(2k) = sum_j C(2k, j) m_{2k-2j}, inverting circle_moments_from_loops.
std::vector<Rational> loops_from_circle_moments(const std::vector<Rational>& moments);

struct SeriesBundle {
  RationalFunction poincare;  // f, variable z
  RationalFunction theta;     // Theta, variable q
  RationalFunction t_series;  // T, variable q
  PowerSeries stieltjes_mu;   // sigma(z) = sum_l loop(l) z^l, from walks
  PowerSeries stieltjes_eps;  // S(q), from circle moments of the loop counts
};

/// Builds every field independently: f from the resolvent, sigma from walk
/// counts of the full adjacency matrix, S from the circle-moment inversion.
SeriesBundle make_bundle(const graphs::BipartiteGraph& g, std::size_t order);

/// Checks sigma(z) = f(z^2) and 2S(q) - 1 = Theta(q^2) - q^2 through z^order,
/// q^order.
bool verify_stieltjes_links(const SeriesBundle& bundle, std::size_t order);

}  // namespace adespec::series
