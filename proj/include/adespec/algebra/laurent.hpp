#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "adespec/algebra/poly.hpp"

namespace adespec::algebra {

/// Laurent polynomial sum_{e=low}^{high} c_e x^e over Q. Normalised so that
/// both extreme stored coefficients are nonzero; the zero polynomial has no
/// coefficients and low exponent 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(implicit)
  template <std::integral I>
  LaurentPoly(I constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  LaurentPoly(const Poly& p);  // NOLINT(implicit)
  LaurentPoly(long low, std::vector<Rational> coeffs);

  static LaurentPoly monomial(const Rational& c, long exponent);
  /// y = 2 + x + x^{-1}, the change of variables used by the tail recursions.
  static LaurentPoly y_of_q();

  bool is_zero() const { return c_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  Rational coefficient(long e) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  /// x^k * this.
  LaurentPoly shifted(long k) const;
  /// Writes this = x^low * p with p(0) != 0 (p = 0 for zero).
  std::pair<Poly, long> split() const;
  /// Quotient when exact; throws otherwise.
  LaurentPoly exact_div(const LaurentPoly& divisor) const;
  /// Invariant under x -> x^{-1}.
  bool is_symmetric() const;

  std::string str(const std::string& var = "q") const;

 private:
  void normalize();
  long low_ = 0;
  std::vector<Rational> c_;
};

/// Evaluates p(value) in the Laurent ring.
LaurentPoly evaluate_at(const Poly& p, const LaurentPoly& value);

}  // namespace adespec::algebra
