#pragma once

#include <string>

#include "adespec/algebra/laurent.hpp"
#include "adespec/algebra/poly.hpp"
#include "adespec/algebra/power_series.hpp"

namespace adespec::algebra {

/// Exact quotient num/den of polynomials over Q in a single formal variable.
///
/// Stored in lowest terms with the lowest-order nonzero coefficient of den
/// equal to 1, so two equal functions have identical storage. Which variable
/// (z, q or y) the object lives in is a convention of the caller; the
/// substitutions between them are explicit functions below.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  template <std::integral I>
  RationalFunction(I c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(const Poly& num) : num_(num), den_(1) {}  // NOLINT
  RationalFunction(Poly num, Poly den);

  /// num/den for Laurent inputs; the common power of the variable is
  /// moved into whichever side keeps both polynomial.
  static RationalFunction from_laurent(const LaurentPoly& num,
                                       const LaurentPoly& den);
  static RationalFunction from_laurent(const LaurentPoly& p) {
    return from_laurent(p, LaurentPoly(1));
  }
  /// x^k for any integer k.
  static RationalFunction power(long k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Poly(1); }

  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Power series at 0 through x^order. Throws pole_at_origin when den(0)=0.
  PowerSeries series_expand(std::size_t order) const;
  /// f(x^d).
  RationalFunction substitute_power(std::size_t d) const;
  /// f(x) = g(x^2) -> g(x). Throws when f is not even.
  RationalFunction halve_exponents() const;
  Rational evaluate(const Rational& at) const;

  std::string str(const std::string& var = "q") const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

/// num(a)*den(b) == num(b)*den(a), independent of the stored normal form.
bool ratfun_equal(const RationalFunction& a, const RationalFunction& b);

/// f(z) at z = q/(1+q)^2, cleared of denominators with (1+q)^{2 max(deg)}.
RationalFunction substitute_z(const RationalFunction& f);

}  // namespace adespec::algebra
