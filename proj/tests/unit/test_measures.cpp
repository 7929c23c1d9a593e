#include <gtest/gtest.h>

#include "adespec/error.hpp"
#include "adespec/graphs/graph.hpp"
#include "adespec/measures/measure.hpp"
#include "adespec/series/jones.hpp"

using namespace adespec;
using namespace adespec::algebra;
using namespace adespec::measures;
using graphs::GraphName;

namespace {

CycloMeasure m(const std::string& s) { return CycloMeasure::parse(s); }

BigInt catalan_number(unsigned long n) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
  return b / (n + 1);
}

}  // namespace

TEST(Atoms, Moments) {
  EXPECT_EQ(moment(MeasureAtom::uniform_roots(3), 6), Rational(1));
  EXPECT_EQ(moment(MeasureAtom::uniform_roots(3), 3), Rational(0));
  EXPECT_EQ(moment(MeasureAtom::uniform_roots(3), -6), Rational(1));
  EXPECT_EQ(moment(MeasureAtom::alpha_circle(), 2), Rational(-1, 2));
  EXPECT_EQ(moment(MeasureAtom::alpha_circle(), 0), Rational(1));
  EXPECT_EQ(moment(MeasureAtom::alpha_circle(), 4), Rational(0));
  EXPECT_EQ(moment(MeasureAtom::alpha_roots(2), 2), Rational(-1));
  EXPECT_EQ(moment(MeasureAtom::alpha_roots(2), 4), Rational(1));
  EXPECT_EQ(moment(MeasureAtom::uniform_circle(), 0), Rational(1));
  EXPECT_EQ(moment(MeasureAtom::uniform_circle(), 2), Rational(0));
}

TEST(Atoms, RangeAndParse) {
  EXPECT_THROW(MeasureAtom::alpha_roots(1), Error);
  EXPECT_THROW(MeasureAtom::uniform_roots(0), Error);
  EXPECT_EQ(MeasureAtom::parse("AlphaRoots(4)"), MeasureAtom::alpha_roots(4));
  EXPECT_EQ(MeasureAtom::parse("ad4"), MeasureAtom::alpha_roots(4));
  EXPECT_EQ(MeasureAtom::parse("αd4"), MeasureAtom::alpha_roots(4));
  EXPECT_EQ(MeasureAtom::parse("d"), MeasureAtom::uniform_circle());
  EXPECT_THROW(MeasureAtom::parse("x3"), Error);
}

TEST(CycloMeasure, ParsePrintAndArithmetic) {
  const auto e6 = m("ad12 + 1/2*d12 - 1/2*d6 - 1/2*d4 + 1/2*d3");
  EXPECT_EQ(e6.str(), "αd12 + 1/2 d12 - 1/2 d6 - 1/2 d4 + 1/2 d3");
  EXPECT_EQ(CycloMeasure::parse(e6.str()), e6);
  EXPECT_EQ(m("1/2d3 + 2 ad4"), m("1/2*d3 + 2*ad4"));
  EXPECT_EQ(e6.mass(), Rational(1));
  EXPECT_EQ((e6 - e6).terms().size(), 0u);
  EXPECT_EQ(d_prime(3), m("2*d6 - d3"));
  EXPECT_EQ(alpha_d_prime(1), m("2*ad2"));
  EXPECT_THROW(CycloMeasure::parse(""), Error);
  EXPECT_THROW(CycloMeasure::parse("d3 d4"), Error);
}

TEST(Pushforward, SemicircleGivesCatalan) {
  const CycloMeasure semicircle(MeasureAtom::alpha_circle());
  for (unsigned long k = 0; k <= 15; ++k)
    EXPECT_EQ(pushforward_moment(semicircle, 2 * static_cast<long>(k)), Rational(catalan_number(k))) << k;
  for (long k = 1; k < 30; k += 2) EXPECT_EQ(pushforward_moment(semicircle, k), Rational(0));
}

TEST(Pushforward, HaarGivesCentralBinomials) {
  const CycloMeasure haar(MeasureAtom::uniform_circle());
  for (unsigned long k = 0; k <= 15; ++k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * k, k);
    EXPECT_EQ(pushforward_moment(haar, 2 * static_cast<long>(k)), Rational(b));
  }
}

TEST(TSeries, AtomFormulas) {
  for (long n = 2; n <= 12; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    EXPECT_TRUE(ratfun_equal(measure_t_series(MeasureAtom::alpha_roots(n)),
                             RationalFunction(Poly::one_minus_power(nn - 1), Poly::one_minus_power(nn))));
    // T(alpha d'_n) = (1 + q^{n-1})/(1 + q^n)
    EXPECT_TRUE(ratfun_equal(measure_t_series(alpha_d_prime(n)),
                             RationalFunction(Poly(1) + Poly::monomial(1, nn - 1),
                                              Poly(1) + Poly::monomial(1, nn))));
    // T(d'_n) = (1 - q^n)/((1 - q)(1 + q^n))
    EXPECT_TRUE(ratfun_equal(measure_t_series(d_prime(n)),
                             RationalFunction(Poly::one_minus_power(nn),
                                              Poly::one_minus_power(1) *
                                                  (Poly(1) + Poly::monomial(1, nn)))));
  }
}

TEST(TSeries, ExactStieltjesAgreesWithAtomFormula) {
  for (const auto& s : {"d3", "ad5", "ad12 + 1/2*d12 - 1/2*d6 - 1/2*d4 + 1/2*d3", "d", "ad",
                        "d2 - 1/2*d1 + 1/2*d"}) {
    const auto mu = m(s);
    EXPECT_TRUE(ratfun_equal(series::t_from_stieltjes(stieltjes_transform(mu)), measure_t_series(mu)))
        << s;
  }
}

TEST(Catalog, MeasuresReproduceLoops) {
  for (const auto& name : graphs::finite_catalog()) {
    const auto e = catalog_measure(name);
    if (!e.measure) continue;
    EXPECT_TRUE(verify_measure(name, *e.measure, 12).ok) << name.str();
  }
  EXPECT_FALSE(catalog_measure(GraphName::E7()).measure.has_value());
  EXPECT_FALSE(catalog_measure(GraphName::E8()).measure.has_value());
  EXPECT_EQ(*catalog_measure(GraphName::F(2, 1, 2)).measure, *catalog_measure(GraphName::E6()).measure);
  EXPECT_THROW(catalog_measure(GraphName::F(4, 4, 4)), Error);
}

TEST(Catalog, WrongMeasureIsRejected) {
  const auto check = verify_measure(GraphName::A(4), CycloMeasure(MeasureAtom::alpha_roots(4)), 10);
  EXPECT_FALSE(check.ok);
  EXPECT_GE(check.failing_k, 1);
  EXPECT_TRUE(verify_measure(GraphName::A(4), CycloMeasure(MeasureAtom::alpha_roots(5)), 10).ok);
}

TEST(Catalog, MomentsFromTOfNonCyclotomicGraphs) {
  for (const auto& name : {GraphName::E7(), GraphName::E8()}) {
    const auto loops = graphs::loop_counts(graphs::build_graph(name), 15);
    const auto from_t = loops_from_t(catalog_measure(name).t_series, 15);
    for (std::size_t k = 0; k <= 15; ++k) EXPECT_EQ(from_t[k], Rational(loops[k])) << name.str();
  }
}

TEST(PointWeights, E6IsAPositiveProbabilityMeasure) {
  const auto w = point_weights(*catalog_measure(GraphName::E6()).measure, 25);
  EXPECT_EQ(w.size(), 12u);
  double total = 0;
  for (const auto& p : w) {
    EXPECT_GT(std::stod(p.decimal), 0.0);
    total += std::stod(p.decimal);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}
