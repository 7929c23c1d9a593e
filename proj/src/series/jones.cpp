#include "adespec/series/jones.hpp"

#include "adespec/algebra/matrix.hpp"
#include "adespec/error.hpp"

namespace adespec::series {

using algebra::Poly;

RationalFunction poincare_resolvent(const graphs::BipartiteDecomposition& d) {
  const auto& L = d.L;
  if (L.rows() == 0) fail(ErrorKind::dimension, "resolvent of an empty L block");
  Poly num = algebra::det_one_minus_x(L.minor(0, 0));
  Poly den = algebra::det_one_minus_x(L);
  return {num, den};
}

RationalFunction jones_theta(const RationalFunction& poincare) {
  const RationalFunction q = RationalFunction::power(1);
  const RationalFunction ratio(Poly{1, -1}, Poly{1, 1});
  return q + ratio * algebra::substitute_z(poincare);
}

RationalFunction t_series(const RationalFunction& theta) {
  const RationalFunction q = RationalFunction::power(1);
  return (theta - q) / RationalFunction(Poly{1, -1});
}

RationalFunction theta_from_t(const RationalFunction& t) {
  return RationalFunction::power(1) + RationalFunction(Poly{1, -1}) * t;
}

RationalFunction t_from_stieltjes(const RationalFunction& stieltjes) {
  RationalFunction e = stieltjes.halve_exponents();
  return (RationalFunction(2) * e - RationalFunction(1)) / RationalFunction(Poly{1, -1});
}

PowerSeries t_from_stieltjes(const PowerSeries& stieltjes) {
  const std::size_t half = stieltjes.order() / 2;
  PowerSeries e(half);
  for (std::size_t i = 0; i <= stieltjes.order(); ++i) {
    if (i % 2 == 1) {
      if (!stieltjes[i].is_zero())
        fail(ErrorKind::consistency, "Stieltjes series has a nonzero odd coefficient at q^" +
                                         std::to_string(i));
      continue;
    }
    if (i / 2 <= half) e[i / 2] = stieltjes[i];
  }
  // Dividing by 1 - q is a running sum.
  PowerSeries t(half);
  Rational acc;
  for (std::size_t i = 0; i <= half; ++i) {
    acc += 2 * e[i] - (i == 0 ? Rational(1) : Rational(0));
    t[i] = acc;
  }
  return t;
}

std::vector<Rational> circle_moments_from_loops(const std::vector<BigInt>& loops) {
  std::vector<Rational> m;
  m.reserve(loops.size());
  for (std::size_t k = 0; k < loops.size(); ++k) {
    if (k == 0) {
      m.emplace_back(loops[0]);
      continue;
    }
    // loop(2k) = C(2k,k) m_0 + 2 sum_{i=1}^{k} C(2k,k-i) m_{2i}
    Rational rest = Rational(loops[k]) - Rational(algebra::binomial(2 * k, k)) * m[0];
    for (std::size_t i = 1; i < k; ++i)
      rest -= 2 * Rational(algebra::binomial(2 * k, k - i)) * m[i];
    m.push_back(rest / 2);
  }
  return m;
}

std::vector<Rational> loops_from_circle_moments(const std::vector<Rational>& moments) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < moments.size(); ++k) {
    Rational acc = Rational(algebra::binomial(2 * k, k)) * moments[0];
    for (std::size_t i = 1; i <= k; ++i)
      acc += 2 * Rational(algebra::binomial(2 * k, k - i)) * moments[i];
    out.push_back(acc);
  }
  return out;
}

SeriesBundle make_bundle(const graphs::BipartiteGraph& g, std::size_t order) {
  SeriesBundle b{.poincare = poincare_resolvent(graphs::decompose(g)),
                 .theta = {},
                 .t_series = {},
                 .stieltjes_mu = PowerSeries(order),
                 .stieltjes_eps = PowerSeries(order)};
  b.theta = jones_theta(b.poincare);
  b.t_series = t_series(b.theta);

  auto walks = graphs::walk_counts(g, order);
  for (std::size_t l = 0; l <= order; ++l) b.stieltjes_mu[l] = Rational(walks[l]);

  auto moments = circle_moments_from_loops(graphs::loop_counts(g, order / 2));
  for (std::size_t k = 0; k < moments.size(); ++k) b.stieltjes_eps[2 * k] = moments[k];
  return b;
}

bool verify_stieltjes_links(const SeriesBundle& bundle, std::size_t order) {
  if (bundle.stieltjes_mu.order() < order || bundle.stieltjes_eps.order() < order)
    return false;
  auto f_sq = bundle.poincare.substitute_power(2).series_expand(order);
  if (!(f_sq == bundle.stieltjes_mu.truncated(order))) return false;

  const RationalFunction q2 = RationalFunction::power(2);
  auto rhs = (bundle.theta.substitute_power(2) - q2).series_expand(order);
  auto lhs = Rational(2) * bundle.stieltjes_eps.truncated(order);
  lhs[0] -= 1;
  return lhs == rhs;
}

}  // namespace adespec::series
