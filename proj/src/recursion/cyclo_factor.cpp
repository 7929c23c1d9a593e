#include "adespec/recursion/cyclo_factor.hpp"

#include <algorithm>
#include <map>

namespace adespec::recursion {

using algebra::Rational;

namespace {

// Divides p by 1 - q^d for d = deg p .. 1, retrying each d until it fails.
FactorList strip(Poly& p) {
  FactorList out;
  if (p.is_zero()) return out;
  for (std::size_t d = p.degree().value(); d >= 1; --d) {
    long mult = 0;
    const Poly f = Poly::one_minus_power(d);
    while (!(p.degree() < f.degree()) && p.divisible_by(f)) {
      p = p.exact_div(f);
      ++mult;
    }
    if (mult) out.emplace_back(d, mult);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Multiplicities of Phi_n in p (Phi_1 = 1 - q); false when a non-cyclotomic
// factor remains.
bool phi_multiplicities(Poly p, std::map<std::size_t, long>& mult, long sign,
                        Rational& constant) {
  if (p.is_zero() || p[0].is_zero()) return false;
  std::size_t n = 1;
  while (p.degree() > algebra::Degree::of(0)) {
    const std::size_t deg = p.degree().value();
    if (n > 2 * deg * deg + 2) return false;
    if (algebra::totient(n) <= deg) {
      const Poly& phi = algebra::cyclotomic(n);
      while (p.divisible_by(phi)) {
        p = p.exact_div(phi);
        mult[n] += sign;
      }
    }
    ++n;
  }
  constant = p[0];
  return true;
}

std::string factor_product(const FactorList& fs) {
  std::string s;
  for (auto [d, m] : fs) {
    std::string f = d == 1 ? "(1-q)" : "(1-q^" + std::to_string(d) + ")";
    if (m != 1) f += "^" + std::to_string(m);
    s += f;
  }
  return s;
}

}  // namespace

GreedyFactors cyclotomic_simplify(const RationalFunction& f) {
  GreedyFactors g;
  g.num_residual = f.num();
  g.den_residual = f.den();
  g.num = strip(g.num_residual);
  g.den = strip(g.den_residual);
  return g;
}

std::optional<ProductForm> product_form(const RationalFunction& f) {
  std::map<std::size_t, long> e;
  Rational cn, cd;
  if (!phi_multiplicities(f.num(), e, 1, cn)) return std::nullopt;
  if (!phi_multiplicities(f.den(), e, -1, cd)) return std::nullopt;
  // Phi_n divides 1 - q^d exactly when n | d, so e_n = sum_{n|d} m_d;
  // solve for m from the top down.
  std::map<std::size_t, long> m;
  const std::size_t top = e.empty() ? 0 : e.rbegin()->first;
  for (std::size_t n = top; n >= 1; --n) {
    long v = e.count(n) ? e[n] : 0;
    for (std::size_t d = 2 * n; d <= top; d += n)
      if (auto it = m.find(d); it != m.end()) v -= it->second;
    if (v != 0) m[n] = v;
  }
  ProductForm pf;
  pf.constant = cn / cd;
  for (auto [d, v] : m)
    if (v != 0) pf.exponents.emplace_back(d, v);
  return pf;
}

RationalFunction ProductForm::value() const {
  Poly num(constant), den(1);
  for (auto [d, v] : exponents)
    for (long i = 0; i < std::abs(v); ++i)
      (v > 0 ? num : den) *= Poly::one_minus_power(d);
  return {num, den};
}

std::string ProductForm::str() const {
  FactorList up, down;
  for (auto [d, v] : exponents) (v > 0 ? up : down).emplace_back(d, std::abs(v));
  std::string s = factor_product(up);
  if (s.empty()) s = constant.str();
  else if (constant == Rational(-1)) s = "-" + s;
  else if (constant != Rational(1)) s = constant.str() + "*" + s;
  if (!down.empty())
    s += "/" + (down.size() == 1 ? factor_product(down) : "(" + factor_product(down) + ")");
  return s;
}

std::string str(const GreedyFactors& g) {
  std::string num = factor_product(g.num);
  if (g.num_residual != Poly(1) || num.empty())
    num = "(" + g.num_residual.str() + ")" + num;
  std::string den = factor_product(g.den);
  if (g.den_residual != Poly(1)) den = "(" + g.den_residual.str() + ")" + den;
  if (den.empty()) return num;
  return num + "/(" + den + ")";
}

}  // namespace adespec::recursion
