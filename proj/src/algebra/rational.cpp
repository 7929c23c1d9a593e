#include "adespec/algebra/rational.hpp"

#include "adespec/error.hpp"

namespace adespec::algebra {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::division, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::string buf(s);
    if (buf.empty()) fail(ErrorKind::parse, "empty integer in rational");
    std::size_t start = (buf[0] == '-' || buf[0] == '+') ? 1 : 0;
    if (start == buf.size()) fail(ErrorKind::parse, "bad integer '" + buf + "'");
    for (std::size_t i = start; i < buf.size(); ++i)
      if (buf[i] < '0' || buf[i] > '9')
        fail(ErrorKind::parse, "bad integer '" + buf + "'");
    if (buf[0] == '+') buf.erase(0, 1);
    return BigInt(buf, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::division, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(10); }

std::string Rational::fraction() const {
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt catalan(unsigned long n) {
  BigInt c = binomial(2 * n, n);
  return c / (n + 1);
}

}  // namespace adespec::algebra
