#include "adespec/algebra/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "adespec/error.hpp"

namespace adespec::algebra {

namespace {
const Rational kZero{0};
}

std::size_t Degree::value() const {
  if (neg_inf_) fail(ErrorKind::consistency, "degree of the zero polynomial");
  return d_;
}

std::ostream& operator<<(std::ostream& os, const Degree& d) {
  if (d.is_neg_inf()) return os << "-inf";
  return os << d.value();
}

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t exponent) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return Poly(std::move(v));
}

Poly Poly::one_minus_power(std::size_t d) {
  return Poly(1) - monomial(1, d);
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Degree Poly::degree() const {
  return c_.empty() ? Degree::neg_inf() : Degree::of(c_.size() - 1);
}

const Rational& Poly::operator[](std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const Rational& Poly::leading() const {
  if (c_.empty()) fail(ErrorKind::consistency, "leading coefficient of zero");
  return c_.back();
}

std::size_t Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& v : acc) {
    v.canonicalize();
    out.emplace_back(Rational(v.get_num(), v.get_den()));
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::division, "polynomial division by zero");
  if (c_.size() < divisor.c_.size()) return {Poly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1);
  const Rational& lead = divisor.c_.back();
  const std::size_t dn = divisor.c_.size() - 1;
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational& top = rem[i + dn];
    if (top.is_zero()) continue;
    Rational f = top / lead;
    quot[i] = f;
    for (std::size_t j = 0; j <= dn; ++j) rem[i + j] -= f * divisor.c_[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero())
    fail(ErrorKind::division, "inexact polynomial division: " + str() + " / " +
                                  divisor.str());
  return q;
}

bool Poly::divisible_by(const Poly& divisor) const {
  return divmod(divisor).second.is_zero();
}

Rational Poly::evaluate(const Rational& at) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

Poly Poly::substitute_power(std::size_t d) const {
  if (d == 0) return Poly(evaluate(1));
  if (c_.empty()) return {};
  std::vector<Rational> v((c_.size() - 1) * d + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * d] = c_[i];
  return Poly(std::move(v));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
  return acc;
}

Poly Poly::shifted(std::size_t k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<Rational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::unshifted(std::size_t k) const {
  if (k == 0 || c_.empty()) return *this;
  for (std::size_t i = 0; i < k && i < c_.size(); ++i)
    if (!c_[i].is_zero())
      fail(ErrorKind::division, "polynomial not divisible by x^" +
                                    std::to_string(k));
  if (k >= c_.size()) return {};
  return Poly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

bool Poly::is_even() const {
  for (std::size_t i = 1; i < c_.size(); i += 2)
    if (!c_[i].is_zero()) return false;
  return true;
}

Poly Poly::halve_exponents() const {
  if (!is_even()) fail(ErrorKind::consistency, "polynomial is not even: " + str());
  std::vector<Rational> v;
  for (std::size_t i = 0; i < c_.size(); i += 2) v.push_back(c_[i]);
  return Poly(std::move(v));
}

bool Poly::is_palindromic(std::size_t nominal_degree) const {
  if (!is_zero() && degree().value() > nominal_degree) return false;
  for (std::size_t k = 0; k <= nominal_degree; ++k)
    if ((*this)[k] != (*this)[nominal_degree - k]) return false;
  return true;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

std::size_t totient(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const Poly& cyclotomic(std::size_t n) {
  if (n == 0) fail(ErrorKind::range, "cyclotomic polynomial of index 0");
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<Poly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  // 1 - x^n divided by Phi_d for the proper divisors d; computed without
  // re-entering the locked cache.
  std::map<std::size_t, Poly> local;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    auto hit = cache.find(d);
    if (hit != cache.end()) {
      local[d] = *hit->second;
      continue;
    }
    Poly p = Poly::one_minus_power(d);
    for (auto& [e, phi] : local)
      if (d % e == 0) p = p.exact_div(phi);
    local[d] = p;
    cache[d] = std::make_unique<Poly>(p);
  }
  return *cache[n];
}

}  // namespace adespec::algebra
