#include "adespec/measures/measure.hpp"

#include <mpfr.h>

#include <cctype>
#include <numeric>

#include "adespec/error.hpp"
#include "adespec/series/jones.hpp"

namespace adespec::measures {

using algebra::Poly;
using Kind = MeasureAtom::Kind;

MeasureAtom MeasureAtom::uniform_roots(long n) {
  if (n < 1) fail(ErrorKind::range, "UniformRoots(n) needs n >= 1");
  return {Kind::UniformRoots, n};
}

MeasureAtom MeasureAtom::alpha_roots(long n) {
  if (n < 2) fail(ErrorKind::range, "AlphaRoots(n) needs n >= 2");
  return {Kind::AlphaRoots, n};
}

std::string MeasureAtom::str() const {
  switch (kind) {
    case Kind::UniformCircle: return "UniformCircle";
    case Kind::UniformRoots: return "UniformRoots(" + std::to_string(n) + ")";
    case Kind::AlphaCircle: return "AlphaCircle";
    case Kind::AlphaRoots: return "AlphaRoots(" + std::to_string(n) + ")";
  }
  return "?";
}

std::string MeasureAtom::short_str() const {
  switch (kind) {
    case Kind::UniformCircle: return "d";
    case Kind::UniformRoots: return "d" + std::to_string(n);
    case Kind::AlphaCircle: return "αd";
    case Kind::AlphaRoots: return "αd" + std::to_string(n);
  }
  return "?";
}

namespace {

long parse_index(const std::string& digits, const std::string& whole) {
  if (digits.empty() || digits.size() > 9 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    fail(ErrorKind::parse, "bad measure atom '" + whole + "'");
  return std::stol(digits);
}

}  // namespace

MeasureAtom MeasureAtom::parse(const std::string& text) {
  if (text == "UniformCircle" || text == "d") return uniform_circle();
  if (text == "AlphaCircle" || text == "ad" || text == "αd") return alpha_circle();
  auto inner = [&](const std::string& prefix) {
    return parse_index(text.substr(prefix.size(), text.size() - prefix.size() - 1), text);
  };
  if (text.starts_with("UniformRoots(") && text.ends_with(")"))
    return uniform_roots(inner("UniformRoots("));
  if (text.starts_with("AlphaRoots(") && text.ends_with(")"))
    return alpha_roots(inner("AlphaRoots("));
  if (text.starts_with("αd")) return alpha_roots(parse_index(text.substr(3), text));
  if (text.starts_with("ad")) return alpha_roots(parse_index(text.substr(2), text));
  if (text.starts_with("d")) return uniform_roots(parse_index(text.substr(1), text));
  fail(ErrorKind::parse, "unknown measure atom '" + text + "'");
}

CycloMeasure& CycloMeasure::add(const MeasureAtom& atom, const Rational& c) {
  Rational& slot = terms_[atom];
  slot += c;
  if (slot.is_zero()) terms_.erase(atom);
  return *this;
}

Rational CycloMeasure::mass() const {
  Rational s;
  for (const auto& [a, c] : terms_) s += c;
  return s;
}

CycloMeasure operator+(CycloMeasure a, const CycloMeasure& b) {
  for (const auto& [atom, c] : b.terms_) a.add(atom, c);
  return a;
}

CycloMeasure operator-(const CycloMeasure& a, const CycloMeasure& b) {
  return a + Rational(-1) * b;
}

CycloMeasure operator*(const Rational& s, const CycloMeasure& a) {
  CycloMeasure out;
  for (const auto& [atom, c] : a.terms_) out.add(atom, s * c);
  return out;
}

std::string CycloMeasure::str() const {
  if (terms_.empty()) return "0";
  // Alpha atoms first, then by descending parameter, the way the catalog is
  // usually written.
  std::vector<std::pair<MeasureAtom, Rational>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.is_alpha() != y.first.is_alpha()) return x.first.is_alpha();
    const long nx = x.first.n == 0 ? 1L << 30 : x.first.n;
    const long ny = y.first.n == 0 ? 1L << 30 : y.first.n;
    return nx > ny;
  });
  std::string s;
  for (const auto& [atom, c] : items) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (mag != Rational(1)) s += mag.str() + " ";
    s += atom.short_str();
  }
  return s;
}

CycloMeasure CycloMeasure::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) fail(ErrorKind::parse, "empty measure");
  CycloMeasure m;
  std::size_t i = 0;
  while (i < t.size()) {
    Rational sign(1);
    if (t[i] == '+' || t[i] == '-') {
      if (t[i] == '-') sign = Rational(-1);
      ++i;
    } else if (i != 0) {
      fail(ErrorKind::parse, "expected '+' or '-' in measure '" + text + "'");
    }
    std::size_t end = i;
    int depth = 0;
    while (end < t.size() && (depth > 0 || (t[end] != '+' && t[end] != '-'))) {
      if (t[end] == '(') ++depth;
      if (t[end] == ')') --depth;
      ++end;
    }
    std::string term = t.substr(i, end - i);
    if (term.empty()) fail(ErrorKind::parse, "empty term in measure '" + text + "'");
    Rational coef(1);
    if (auto star = term.find('*'); star != std::string::npos) {
      coef = Rational::parse(term.substr(0, star));
      term = term.substr(star + 1);
    } else {
      // A bare coefficient may run straight into the atom, as str() prints it.
      std::size_t digits = 0;
      while (digits < term.size() &&
             (std::isdigit(static_cast<unsigned char>(term[digits])) || term[digits] == '/'))
        ++digits;
      if (digits > 0) {
        coef = Rational::parse(term.substr(0, digits));
        term = term.substr(digits);
      }
    }
    m.add(MeasureAtom::parse(term), sign * coef);
    i = end;
  }
  return m;
}

CycloMeasure d_prime(long n) {
  return Rational(2) * CycloMeasure(MeasureAtom::uniform_roots(2 * n)) -
         CycloMeasure(MeasureAtom::uniform_roots(n));
}

CycloMeasure alpha_d_prime(long n) {
  CycloMeasure m = Rational(2) * CycloMeasure(MeasureAtom::alpha_roots(2 * n));
  if (n >= 2) m = m - CycloMeasure(MeasureAtom::alpha_roots(n));
  return m;
}

namespace {

Rational base_moment(const MeasureAtom& a, long k) {
  if (a.kind == Kind::UniformCircle || a.kind == Kind::AlphaCircle) return k == 0 ? 1 : 0;
  return k % (2 * a.n) == 0 ? 1 : 0;
}

}  // namespace

Rational moment(const MeasureAtom& a, long k) {
  if (!a.is_alpha()) return base_moment(a, k);
  return base_moment(a, k) - (base_moment(a, k + 2) + base_moment(a, k - 2)) / 2;
}

Rational moment(const CycloMeasure& m, long k) {
  Rational s;
  for (const auto& [atom, c] : m.terms()) s += c * moment(atom, k);
  return s;
}

Rational pushforward_moment(const CycloMeasure& m, long k) {
  if (k < 0) fail(ErrorKind::range, "pushforward moment of negative order");
  Rational s;
  for (long j = 0; j <= k; ++j)
    s += Rational(algebra::binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j))) *
         moment(m, k - 2 * j);
  return s;
}

RationalFunction measure_t_series(const MeasureAtom& a) {
  const Poly one_minus_q = Poly::one_minus_power(1);
  switch (a.kind) {
    case Kind::UniformCircle: return {Poly(1), one_minus_q};
    case Kind::AlphaCircle: return RationalFunction(1);
    case Kind::UniformRoots: {
      const auto n = static_cast<std::size_t>(a.n);
      return {Poly(1) + Poly::monomial(1, n), one_minus_q * Poly::one_minus_power(n)};
    }
    case Kind::AlphaRoots: {
      const auto n = static_cast<std::size_t>(a.n);
      return {Poly::one_minus_power(n - 1), Poly::one_minus_power(n)};
    }
  }
  fail(ErrorKind::consistency, "unhandled atom kind");
}

RationalFunction measure_t_series(const CycloMeasure& m) {
  RationalFunction t;
  for (const auto& [atom, c] : m.terms()) t = t + RationalFunction(c) * measure_t_series(atom);
  return t;
}

PowerSeries stieltjes_series(const CycloMeasure& m, std::size_t order) {
  PowerSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = moment(m, static_cast<long>(k));
  return s;
}

RationalFunction stieltjes_transform(const CycloMeasure& m) {
  CycloMeasure circle, roots;
  long period = 1;
  for (const auto& [atom, c] : m.terms()) {
    if (atom.kind == Kind::UniformCircle || atom.kind == Kind::AlphaCircle) {
      circle.add(atom, c);
    } else {
      roots.add(atom, c);
      period = std::lcm(period, atom.n);
    }
  }
  // Circle atoms have moments vanishing beyond u^2.
  std::vector<Rational> poly_part;
  for (long k = 0; k <= 2; ++k) poly_part.push_back(moment(circle, k));
  RationalFunction s(Poly(std::move(poly_part)));
  if (roots.terms().empty()) return s;
  const std::size_t len = static_cast<std::size_t>(2 * period);
  std::vector<Rational> window;
  for (std::size_t k = 0; k < len; ++k) window.push_back(moment(roots, static_cast<long>(k)));
  return s + RationalFunction(Poly(std::move(window)), Poly::one_minus_power(len));
}

std::vector<Rational> moments_from_t(const RationalFunction& t, std::size_t max_k) {
  const RationalFunction e =
      (RationalFunction(1) + RationalFunction(Poly::one_minus_power(1)) * t) /
      RationalFunction(2);
  return e.series_expand(max_k).coefficients();
}

std::vector<Rational> loops_from_t(const RationalFunction& t, std::size_t max_k) {
  return series::loops_from_circle_moments(moments_from_t(t, max_k));
}

namespace {

Poly product(std::initializer_list<std::size_t> ds) {
  Poly p(1);
  for (auto d : ds) p *= Poly::one_minus_power(d);
  return p;
}

CycloMeasure atom_d(long n) { return MeasureAtom::uniform_roots(n); }
CycloMeasure atom_ad(long n) { return MeasureAtom::alpha_roots(n); }
const Rational half = Rational(1, 2);

}  // namespace

RationalFunction t_e6() { return {product({6, 8}), product({3, 12})}; }
RationalFunction t_e7() { return {product({9, 12}), product({4, 18})}; }
RationalFunction t_e8() { return {product({10, 15, 18}), product({5, 9, 30})}; }
RationalFunction t_e6ext() { return {product({12}), product({3, 4, 6})}; }
RationalFunction t_e7ext() { return {product({18}), product({4, 6, 9})}; }
RationalFunction t_e8ext() { return {product({30}), product({6, 10, 15})}; }

MeasureCatalogEntry catalog_measure(const GraphName& raw) {
  const GraphName name = raw.canonical();
  name.validate();
  MeasureCatalogEntry e{raw, std::nullopt, {}};
  using graphs::GraphTag;
  switch (name.tag) {
    case GraphTag::A: e.measure = atom_ad(name.a + 1); break;
    case GraphTag::D: e.measure = alpha_d_prime(name.a - 1); break;
    case GraphTag::E6:
      e.measure = atom_ad(12) + half * (atom_d(12) - atom_d(6) - atom_d(4) + atom_d(3));
      break;
    case GraphTag::E7: e.t_series = t_e7(); return e;
    case GraphTag::E8: e.t_series = t_e8(); return e;
    case GraphTag::A1ext: e.measure = atom_d(name.a / 2); break;
    case GraphTag::D1ext: e.measure = half * (d_prime(1) + atom_d(name.a - 2)); break;
    case GraphTag::E6ext: e.measure = atom_ad(3) + half * (atom_d(2) - atom_d(3)); break;
    case GraphTag::E7ext: e.measure = atom_ad(4) + half * (atom_d(3) - atom_d(4)); break;
    case GraphTag::E8ext: e.measure = atom_ad(6) + half * (atom_d(5) - atom_d(6)); break;
    case GraphTag::AInf: e.measure = CycloMeasure(MeasureAtom::alpha_circle()); break;
    case GraphTag::AZZ: e.measure = CycloMeasure(MeasureAtom::uniform_circle()); break;
    case GraphTag::DInf:
      e.measure = half * (d_prime(1) + CycloMeasure(MeasureAtom::uniform_circle()));
      break;
    case GraphTag::F:
      fail(ErrorKind::catalog, raw.str() + " has no catalog measure");
  }
  e.t_series = measure_t_series(*e.measure);
  return e;
}

MomentCheck verify_measure(const graphs::BipartiteGraph& g, const CycloMeasure& m,
                           std::size_t k_max) {
  const auto loops = graphs::loop_counts(g, k_max);
  for (std::size_t k = 0; k <= k_max; ++k) {
    Rational expected = pushforward_moment(m, static_cast<long>(2 * k));
    if (expected != Rational(loops[k]))
      return {false, static_cast<long>(k), expected, loops[k]};
  }
  return {};
}

MomentCheck verify_measure(const GraphName& name, const CycloMeasure& m, std::size_t k_max) {
  if (name.is_symbolic())
    return verify_measure(graphs::truncate_infinite(name, 2 * k_max + 2), m, k_max);
  return verify_measure(graphs::build_graph(name), m, k_max);
}

std::vector<PointWeight> point_weights(const CycloMeasure& m, int digits) {
  long big_n = 1;
  for (const auto& [atom, c] : m.terms())
    if (atom.kind == Kind::UniformRoots || atom.kind == Kind::AlphaRoots)
      big_n = std::lcm(big_n, atom.n);

  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 4 + 64);
  mpfr_t angle, s, total;
  mpfr_inits2(prec, angle, s, total, static_cast<mpfr_ptr>(nullptr));

  std::vector<PointWeight> out;
  for (long j = 0; j < 2 * big_n; ++j) {
    // The point exp(i pi j / N) is a 2n-th root of unity iff n j / N is an integer.
    Rational uniform, alpha;
    for (const auto& [atom, c] : m.terms()) {
      if (atom.kind != Kind::UniformRoots && atom.kind != Kind::AlphaRoots) continue;
      if ((atom.n * j) % big_n != 0) continue;
      const Rational w = c / Rational(2 * atom.n);
      (atom.kind == Kind::UniformRoots ? uniform : alpha) += w;
    }
    if (uniform.is_zero() && alpha.is_zero()) continue;

    // total = uniform + alpha * 2 sin^2(pi j / N); sin^2 is rational exactly
    // when the reduced denominator of j / N divides 4 or 6.
    const long g0 = std::gcd(j, big_n);
    const long den = big_n / g0;
    std::optional<Rational> sin_sq;
    if (den == 1) sin_sq = Rational(0);
    else if (den == 2) sin_sq = Rational(1);
    else if (den == 4) sin_sq = Rational(1, 2);
    else if (den == 3) sin_sq = Rational(3, 4);
    else if (den == 6) sin_sq = Rational(1, 4);
    std::string dec;
    auto render = [&](mpfr_t v) {
      char* buf = nullptr;
      mpfr_asprintf(&buf, "%.*Rg", digits, v);
      dec = buf;
      mpfr_free_str(buf);
    };
    if (sin_sq) {
      const Rational exact = uniform + alpha * 2 * *sin_sq;
      if (exact.is_zero()) continue;
      mpfr_set_q(total, exact.raw().get_mpq_t(), MPFR_RNDN);
      render(total);
    } else {
      mpfr_const_pi(angle, MPFR_RNDN);
      mpfr_mul_si(angle, angle, j, MPFR_RNDN);
      mpfr_div_si(angle, angle, big_n, MPFR_RNDN);
      mpfr_sin(s, angle, MPFR_RNDN);
      mpfr_sqr(s, s, MPFR_RNDN);
      mpfr_mul_ui(s, s, 2, MPFR_RNDN);
      mpfr_mul_q(s, s, alpha.raw().get_mpq_t(), MPFR_RNDN);
      mpfr_set_q(total, uniform.raw().get_mpq_t(), MPFR_RNDN);
      mpfr_add(total, total, s, MPFR_RNDN);
      render(total);
    }

    const long g = std::gcd(j, big_n);
    out.push_back({j / g, big_n / g, uniform, dec});
  }
  mpfr_clears(angle, s, total, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace adespec::measures
