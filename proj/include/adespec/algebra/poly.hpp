#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "adespec/algebra/rational.hpp"

namespace adespec::algebra {

/// Polynomial degree with an explicit negative-infinity value for the zero
/// polynomial.
class Degree {
 public:
  static Degree neg_inf() { return Degree(); }
  static Degree of(std::size_t d) { return Degree(d); }

  bool is_neg_inf() const { return neg_inf_; }
  /// Finite value. Calling on -inf throws.
  std::size_t value() const;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.d_ == b.d_);
  }
  friend bool operator<(const Degree& a, const Degree& b) {
    if (a.neg_inf_) return !b.neg_inf_;
    if (b.neg_inf_) return false;
    return a.d_ < b.d_;
  }
  friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
  friend bool operator>(const Degree& a, const Degree& b) { return b < a; }

  /// deg(pq) = deg p + deg q, with -inf absorbing.
  friend Degree operator+(const Degree& a, const Degree& b) {
    if (a.neg_inf_ || b.neg_inf_) return neg_inf();
    return of(a.d_ + b.d_);
  }

 private:
  Degree() = default;
  explicit Degree(std::size_t d) : neg_inf_(false), d_(d) {}
  bool neg_inf_ = true;
  std::size_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; the
/// highest stored coefficient is nonzero (empty storage is the zero
/// polynomial).
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(implicit)
  template <std::integral I>
  Poly(I constant) : Poly(Rational(constant)) {}  // NOLINT(implicit)
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly monomial(const Rational& c, std::size_t exponent);
  static Poly x() { return monomial(1, 1); }
  /// 1 - x^d.
  static Poly one_minus_power(std::size_t d);

  bool is_zero() const { return c_.empty(); }
  Degree degree() const;
  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const { return c_.size(); }
  /// Coefficient of x^i; zero beyond the degree.
  const Rational& operator[](std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const;
  /// Index of the lowest nonzero coefficient (valuation); 0 for zero.
  std::size_t valuation() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division over Q: returns (quotient, remainder).
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  /// Quotient when the division is exact; throws otherwise.
  Poly exact_div(const Poly& divisor) const;
  bool divisible_by(const Poly& divisor) const;

  Rational evaluate(const Rational& at) const;
  /// p(x^d).
  Poly substitute_power(std::size_t d) const;
  /// p(inner(x)).
  Poly compose(const Poly& inner) const;
  /// x^k p(x).
  Poly shifted(std::size_t k) const;
  /// Divides out x^k; throws if the low coefficients are not zero.
  Poly unshifted(std::size_t k) const;
  /// True when every coefficient of an odd power vanishes.
  bool is_even() const;
  /// p(x) = e(x^2) -> e(x); requires is_even().
  Poly halve_exponents() const;
  /// c_k == c_{n-k} for the given nominal degree n.
  bool is_palindromic(std::size_t nominal_degree) const;

  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Cyclotomic polynomial Phi_n, in the normalisation Phi_1 = 1 - x so that
/// 1 - x^n = prod_{d | n} Phi_d.
const Poly& cyclotomic(std::size_t n);

/// Euler totient.
std::size_t totient(std::size_t n);

}  // namespace adespec::algebra
