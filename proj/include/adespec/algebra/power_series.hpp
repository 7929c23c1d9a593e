#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adespec/algebra/rational.hpp"

namespace adespec::algebra {

/// Power series truncated after x^order; always holds exactly order + 1
/// coefficients.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  PowerSeries(std::size_t order, const std::vector<Rational>& coeffs);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  Rational& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<Rational>& coefficients() const { return c_; }

  PowerSeries truncated(std::size_t order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.c_ == b.c_;
  }

  /// this(inner(x)); inner must have zero constant term.
  PowerSeries compose(const PowerSeries& inner) const;

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

}  // namespace adespec::algebra
