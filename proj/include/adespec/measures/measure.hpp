#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adespec/algebra/power_series.hpp"
#include "adespec/algebra/ratfun.hpp"
#include "adespec/graphs/graph.hpp"

namespace adespec::measures {

using algebra::BigInt;
using algebra::PowerSeries;
using algebra::Rational;
using algebra::RationalFunction;
using graphs::GraphName;

/// One of the four elementary measures on the unit circle:
///   UniformCircle   d       Haar measure
///   UniformRoots(n) d_n     uniform on the 2n-th roots of unity
///   AlphaCircle     alpha d
///   AlphaRoots(n)   alpha d_n, n >= 2
/// with alpha(u) = 2 Im(u)^2 = 1 - (u^2 + u^-2)/2.
struct MeasureAtom {
  enum class Kind { UniformCircle, UniformRoots, AlphaCircle, AlphaRoots };
  Kind kind = Kind::UniformCircle;
  long n = 0;

  static MeasureAtom uniform_circle() { return {Kind::UniformCircle, 0}; }
  /// Throws Error(range) unless n >= 1.
  static MeasureAtom uniform_roots(long n);
  static MeasureAtom alpha_circle() { return {Kind::AlphaCircle, 0}; }
  /// Throws Error(range) unless n >= 2 (alpha d_1 is the zero measure).
  static MeasureAtom alpha_roots(long n);

  bool is_alpha() const { return kind == Kind::AlphaCircle || kind == Kind::AlphaRoots; }

  /// "UniformCircle", "UniformRoots(3)", "AlphaCircle", "AlphaRoots(4)".
  std::string str() const;
  /// Short form: "d", "d3", "αd", "αd4".
  std::string short_str() const;
  /// Accepts str() and short_str() spellings, with "a" for alpha in the
  /// short form ("ad4"). Throws Error(parse) or Error(range).
  static MeasureAtom parse(const std::string& text);

  auto operator<=>(const MeasureAtom&) const = default;
};

/// Finite rational combination of atoms. Zero coefficients are never stored.
class CycloMeasure {
 public:
  CycloMeasure() = default;
  CycloMeasure(const MeasureAtom& atom) { add(atom, 1); }  // NOLINT(implicit)

  CycloMeasure& add(const MeasureAtom& atom, const Rational& c);
  const std::map<MeasureAtom, Rational>& terms() const { return terms_; }
  Rational mass() const;

  friend CycloMeasure operator+(CycloMeasure a, const CycloMeasure& b);
  friend CycloMeasure operator-(const CycloMeasure& a, const CycloMeasure& b);
  friend CycloMeasure operator*(const Rational& s, const CycloMeasure& a);
  friend bool operator==(const CycloMeasure& a, const CycloMeasure& b) {
    return a.terms_ == b.terms_;
  }

  /// "αd12 + 1/2 d12 - 1/2 d6 - 1/2 d4 + 1/2 d3"
  std::string str() const;
  /// Parses sums such as "AlphaRoots(3)", "2*d4-d2" or "ad6+1/2*d5-1/2*d6".
  /// Throws Error(parse).
  static CycloMeasure parse(const std::string& text);

 private:
  std::map<MeasureAtom, Rational> terms_;
};

/// d'_n = 2 d_{2n} - d_n: uniform on the 4n-th roots of unity of odd order.
CycloMeasure d_prime(long n);
/// alpha d'_n = 2 alpha d_{2n} - alpha d_n.
CycloMeasure alpha_d_prime(long n);

/// Integral of u^k (any integer k).
Rational moment(const MeasureAtom& a, long k);
Rational moment(const CycloMeasure& m, long k);

/// Integral of (u + 1/u)^k.
Rational pushforward_moment(const CycloMeasure& m, long k);

/// T(q) of an atom, extended linearly.
RationalFunction measure_t_series(const MeasureAtom& a);
RationalFunction measure_t_series(const CycloMeasure& m);

/// S(q) = sum_{k>=0} m_k q^k through q^order.
PowerSeries stieltjes_series(const CycloMeasure& m, std::size_t order);

/// Exact S(q) = sum_{k>=0} m_k q^k. Circle atoms contribute polynomials; the
/// moments of the root-of-unity atoms are periodic of period 2N, N the lcm of
/// their parameters, so that part is (sum_{k<2N} m_k q^k)/(1 - q^{2N}).
RationalFunction stieltjes_transform(const CycloMeasure& m);

/// Even moments m_0, m_2, ..., m_{2 max_k} of the circle measure whose
/// T-series is t, read off from the expansion of (1 + (1-q) T(q))/2.
std::vector<Rational> moments_from_t(const RationalFunction& t, std::size_t max_k);

/// Pushforward moments loop(0..2 max_k) reconstructed from a T-series.
std::vector<Rational> loops_from_t(const RationalFunction& t, std::size_t max_k);

struct MeasureCatalogEntry {
  GraphName graph;
  std::optional<CycloMeasure> measure;  // empty: not cyclotomic
  RationalFunction t_series;             // the exact T of the graph

  bool cyclotomic() const { return measure.has_value(); }
};

/// Throws Error(catalog) for names outside the catalog (F(a,b,c) without a
/// known canonical name).
MeasureCatalogEntry catalog_measure(const GraphName& name);

/// Catalog T-series of E6, E7, E8 and the three extended E graphs in their
/// product forms.
RationalFunction t_e6();
RationalFunction t_e7();
RationalFunction t_e8();
RationalFunction t_e6ext();
RationalFunction t_e7ext();
RationalFunction t_e8ext();

struct MomentCheck {
  bool ok = true;
  long failing_k = -1;
  Rational expected;
  BigInt actual;
};

/// pushforward_moment(m, 2k) == loop(2k) for k <= k_max.
MomentCheck verify_measure(const graphs::BipartiteGraph& g, const CycloMeasure& m,
                           std::size_t k_max);
/// Same for a name; symbolic names are truncated at size 2 k_max + 2.
MomentCheck verify_measure(const GraphName& name, const CycloMeasure& m, std::size_t k_max);

/// Point masses of the root-of-unity part of m. The alpha atoms weigh each
/// point by 2 sin^2, so the total is only rendered in decimal (MPFR, for
/// display). Points with zero total weight are omitted.
struct PointWeight {
  long numerator;  // the point is exp(i pi numerator / denominator)
  long denominator;
  Rational uniform_mass;  // contribution of the UniformRoots atoms
  std::string decimal;    // total weight including alpha atoms
};
std::vector<PointWeight> point_weights(const CycloMeasure& m, int digits = 30);

}  // namespace adespec::measures
