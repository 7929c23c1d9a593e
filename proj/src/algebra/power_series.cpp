#include "adespec/algebra/power_series.hpp"

#include <algorithm>
#include <sstream>

#include "adespec/error.hpp"

namespace adespec::algebra {

PowerSeries::PowerSeries(std::size_t order) : c_(order + 1) {}

PowerSeries::PowerSeries(std::size_t order, const std::vector<Rational>& coeffs)
    : c_(order + 1) {
  std::copy_n(coeffs.begin(), std::min(coeffs.size(), c_.size()), c_.begin());
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  return PowerSeries(order, c_);
}

namespace {
std::size_t common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  PowerSeries r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (!inner[0].is_zero())
    fail(ErrorKind::consistency, "composition with nonzero constant term");
  const std::size_t n = std::min(order(), inner.order());
  PowerSeries acc(n);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * inner.truncated(n);
    acc[0] += c_[i];
  }
  return acc;
}

std::string PowerSeries::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  return os.str();
}

}  // namespace adespec::algebra
