#include "adespec/algebra/ratfun.hpp"

#include <algorithm>

#include "adespec/error.hpp"

namespace adespec::algebra {

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::division, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > Degree::of(0)) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Rational scale = Rational(1) / den_[den_.valuation()];
  num_ *= scale;
  den_ *= scale;
}

RationalFunction RationalFunction::from_laurent(const LaurentPoly& num,
                                                const LaurentPoly& den) {
  auto [pn, en] = num.split();
  auto [pd, ed] = den.split();
  if (pd.is_zero()) fail(ErrorKind::division, "rational function with zero denominator");
  long shift = en - ed;
  if (shift >= 0) return {pn.shifted(static_cast<std::size_t>(shift)), pd};
  return {pn, pd.shifted(static_cast<std::size_t>(-shift))};
}

RationalFunction RationalFunction::power(long k) {
  if (k >= 0) return RationalFunction(Poly::monomial(1, static_cast<std::size_t>(k)));
  return {Poly(1), Poly::monomial(1, static_cast<std::size_t>(-k))};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) fail(ErrorKind::division, "division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

PowerSeries RationalFunction::series_expand(std::size_t order) const {
  const Rational& d0 = den_[0];
  if (d0.is_zero())
    fail(ErrorKind::pole_at_origin, "series expansion of " + str() +
                                        ": denominator vanishes at 0");
  // den * s = num, solved coefficient by coefficient.
  PowerSeries s(order);
  const Rational inv = Rational(1) / d0;
  const std::size_t dn = den_.size();
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = num_[k];
    for (std::size_t j = 1; j < dn && j <= k; ++j) acc -= den_[j] * s[k - j];
    s[k] = acc * inv;
  }
  return s;
}

RationalFunction RationalFunction::substitute_power(std::size_t d) const {
  return {num_.substitute_power(d), den_.substitute_power(d)};
}

RationalFunction RationalFunction::halve_exponents() const {
  if (!num_.is_even() || !den_.is_even())
    fail(ErrorKind::consistency, "function is not even in its variable: " + str());
  return {num_.halve_exponents(), den_.halve_exponents()};
}

Rational RationalFunction::evaluate(const Rational& at) const {
  Rational d = den_.evaluate(at);
  if (d.is_zero()) fail(ErrorKind::division, "evaluation at a pole");
  return num_.evaluate(at) / d;
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.str();
}

bool ratfun_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

RationalFunction substitute_z(const RationalFunction& f) {
  const auto& n = f.num();
  const auto& d = f.den();
  std::size_t top = 0;
  if (!n.is_zero()) top = std::max(top, n.degree().value());
  top = std::max(top, d.degree().value());
  const Poly one_plus_q{1, 1};
  // sum_i a_i q^i (1+q)^{2(top-i)}
  std::vector<Poly> powers(2 * top + 1);
  powers[0] = Poly(1);
  for (std::size_t i = 1; i < powers.size(); ++i)
    powers[i] = powers[i - 1] * one_plus_q;
  auto clear = [&](const Poly& p) {
    Poly acc;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) continue;
      acc += p[i] * powers[2 * (top - i)].shifted(i);
    }
    return acc;
  };
  return {clear(n), clear(d)};
}

}  // namespace adespec::algebra
