#include "adespec/algebra/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "adespec/error.hpp"

namespace adespec::algebra {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

LaurentPoly::LaurentPoly(const Poly& p) : low_(0), c_(p.coefficients()) {
  normalize();
}

LaurentPoly::LaurentPoly(long low, std::vector<Rational> coeffs)
    : low_(low), c_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long exponent) {
  return LaurentPoly(exponent, {c});
}

LaurentPoly LaurentPoly::y_of_q() { return LaurentPoly(-1, {1, 2, 1}); }

void LaurentPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  auto first = std::find_if(c_.begin(), c_.end(),
                            [](const Rational& r) { return !r.is_zero(); });
  low_ += static_cast<long>(first - c_.begin());
  c_.erase(c_.begin(), first);
  if (c_.empty()) low_ = 0;
}

Rational LaurentPoly::coefficient(long e) const {
  if (c_.empty() || e < low_ || e > high()) return Rational(0);
  return c_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(low_, o.low_);
  long hi = std::max(high(), o.high());
  std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i)
    v[static_cast<std::size_t>(low_ - lo) + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    v[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
  low_ = lo;
  c_ = std::move(v);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly pa(a.c_), pb(b.c_);
  return LaurentPoly(a.low_ + b.low_, (pa * pb).coefficients());
}

LaurentPoly LaurentPoly::shifted(long k) const {
  if (is_zero()) return *this;
  LaurentPoly r = *this;
  r.low_ += k;
  return r;
}

std::pair<Poly, long> LaurentPoly::split() const { return {Poly(c_), low_}; }

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::division, "Laurent division by zero");
  if (is_zero()) return {};
  // Both normalised parts have nonzero constant terms, so polynomial
  // exactness is equivalent to Laurent exactness.
  Poly q = Poly(c_).exact_div(Poly(divisor.c_));
  return LaurentPoly(low_ - divisor.low_, q.coefficients());
}

bool LaurentPoly::is_symmetric() const {
  if (is_zero()) return true;
  if (low_ != -high()) return false;
  for (long e = low_; e <= high(); ++e)
    if (coefficient(e) != coefficient(-e)) return false;
  return true;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = low_; e <= high(); ++e) {
    Rational c = coefficient(e);
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly evaluate_at(const Poly& p, const LaurentPoly& value) {
  LaurentPoly acc;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * value + LaurentPoly(c[i]);
  return acc;
}

}  // namespace adespec::algebra
