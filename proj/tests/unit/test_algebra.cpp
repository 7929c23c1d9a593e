#include <gtest/gtest.h>

#include <random>

#include "adespec/algebra/matrix.hpp"
#include "adespec/algebra/ratfun.hpp"
#include "adespec/error.hpp"

using namespace adespec;
using namespace adespec::algebra;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no adespec::Error thrown";
  return ErrorKind::consistency;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(5).fraction(), "5/1");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(kind_of([] { Rational::parse("1/0"); }), ErrorKind::division);
  EXPECT_EQ(kind_of([] { Rational::parse("x"); }), ErrorKind::parse);
}

TEST(Degree, ZeroPolynomialIsNegativeInfinity) {
  EXPECT_TRUE(Poly().degree().is_neg_inf());
  EXPECT_EQ(Poly({0, 0, 0}).degree(), Degree::neg_inf());
  EXPECT_EQ(Poly({1, 2}).degree(), Degree::of(1));
  EXPECT_TRUE(Degree::neg_inf() < Degree::of(0));
  EXPECT_EQ(Poly() * Poly({1, 1}), Poly());
  EXPECT_EQ(Degree::neg_inf() + Degree::of(3), Degree::neg_inf());
}

TEST(Poly, DivisionAndGcd) {
  const Poly a = Poly::one_minus_power(6);
  const Poly b = Poly::one_minus_power(4);
  EXPECT_EQ(gcd(a, b), Poly({-1, 0, 1}));  // monic: x^2 - 1
  const auto [q, r] = Poly({1, 0, 0, 1}).divmod(Poly({1, 1}));
  EXPECT_EQ(q, Poly({1, -1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(kind_of([] { Poly({1, 0, 1}).exact_div(Poly({1, 1})); }), ErrorKind::division);
  EXPECT_EQ(kind_of([] { Poly({1}).divmod(Poly()); }), ErrorKind::division);
}

TEST(Poly, CyclotomicProductsRecoverOneMinusPower) {
  for (std::size_t n = 1; n <= 40; ++n) {
    Poly prod(1);
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d);
    EXPECT_EQ(prod, Poly::one_minus_power(n)) << n;
    EXPECT_EQ(cyclotomic(n).degree(), Degree::of(totient(n))) << n;
  }
  EXPECT_EQ(cyclotomic(6), Poly({1, -1, 1}));
}

TEST(RationalFunction, NormalFormAndExpansion) {
  const RationalFunction f(Poly::one_minus_power(2), Poly::one_minus_power(3));
  EXPECT_EQ(f.series_expand(6).coefficients(), ints({1, 0, -1, 1, 0, -1, 1}));
  const RationalFunction g(Poly({2, 2}), Poly({4, 8, 4}));
  EXPECT_EQ(g.num(), Poly(Rational(1, 2)));
  EXPECT_EQ(g.den(), Poly({1, 1}));
  EXPECT_TRUE(ratfun_equal(g, RationalFunction(Poly(Rational(1, 2)), Poly({1, 1}))));
  EXPECT_EQ(kind_of([] { RationalFunction(Poly(1), Poly()); }), ErrorKind::division);
  EXPECT_EQ(kind_of([] { RationalFunction(Poly(1), Poly::x()).series_expand(3); }),
            ErrorKind::pole_at_origin);
}

TEST(RationalFunction, FieldOperations) {
  const RationalFunction a(Poly(1), Poly({1, -1}));
  const RationalFunction b(Poly(1), Poly({1, 1}));
  EXPECT_EQ(a + b, RationalFunction(Poly(2), Poly({1, 0, -1})));
  EXPECT_EQ(a * b, RationalFunction(Poly(1), Poly({1, 0, -1})));
  EXPECT_EQ(a / a, RationalFunction(1));
  EXPECT_EQ(a - a, RationalFunction());
  EXPECT_EQ(RationalFunction::power(-2) * RationalFunction::power(3), RationalFunction(Poly::x()));
  EXPECT_EQ(RationalFunction(Poly({1, 0, 1})).halve_exponents(), RationalFunction(Poly({1, 1})));
  EXPECT_EQ(kind_of([] { RationalFunction(Poly({1, 1})).halve_exponents(); }),
            ErrorKind::consistency);
}

TEST(Laurent, SymmetricCharacteristicPolynomial) {
  const LaurentPoly y = LaurentPoly::y_of_q();
  EXPECT_EQ(y, LaurentPoly(-1, ints({1, 2, 1})));
  EXPECT_TRUE(y.is_symmetric());
  EXPECT_EQ((y * y).exact_div(y), y);
  // det(y - [[1]]) = y - 1
  IntMatrix one{{BigInt(1)}};
  EXPECT_EQ(char_poly_in_q(one), y - LaurentPoly(1));
}

TEST(Matrix, BareissMatchesCofactorExpansion) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    LaurentMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = LaurentPoly(-1, ints({entry(rng), entry(rng), entry(rng)}));
    EXPECT_EQ(poly_det(m), cofactor_det(m)) << "trial " << trial;
  }
  EXPECT_EQ(poly_det(LaurentMatrix()), LaurentPoly(1));
  EXPECT_EQ(kind_of([] { poly_det(LaurentMatrix(2, 3)); }), ErrorKind::dimension);
}

TEST(Matrix, DetOneMinusX) {
  IntMatrix a{{BigInt(1), BigInt(1)}, {BigInt(1), BigInt(2)}};
  // det(1 - xA) = 1 - 3x + x^2
  EXPECT_EQ(det_one_minus_x(a), Poly({1, -3, 1}));
}

TEST(PowerSeries, Arithmetic) {
  PowerSeries a(4, ints({1, 1, 0, 0, 0}));
  PowerSeries b(4, ints({1, -1, 1, -1, 1}));
  EXPECT_EQ((a * b).coefficients(), ints({1, 0, 0, 0, 0}));
  PowerSeries inner(4, ints({0, 1, 0, 0, 0}));
  EXPECT_EQ(b.compose(inner), b);
  EXPECT_EQ(kind_of([&] { b.compose(a); }), ErrorKind::consistency);
}
