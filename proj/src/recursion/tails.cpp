#include "adespec/recursion/tails.hpp"

#include "adespec/error.hpp"
#include "adespec/series/jones.hpp"

namespace adespec::recursion {

using algebra::BigInt;
using algebra::Poly;
using algebra::Rational;
using graphs::GraphName;

std::string to_string(TailKind kind) {
  return kind == TailKind::a_tail ? "a_tail" : "fork_tail";
}

bool TailFamily::p_is_monomial() const {
  const auto& n = P.num();
  return P.is_polynomial() && !n.is_zero() && n.valuation() + 1 == n.size();
}

namespace {

// [[d, e1^t], [e1, x]]
IntMatrix border(long d, const IntMatrix& x) {
  const std::size_t n = x.rows() + 1;
  IntMatrix m(n, n);
  m(0, 0) = d;
  if (n > 1) {
    m(0, 1) = 1;
    m(1, 0) = 1;
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) m(i, j) = x(i - 1, j - 1);
  return m;
}

IntMatrix bump_first(IntMatrix x) {
  x(0, 0) += 1;
  return x;
}

// P_1 for both kinds: K1 = L0 + e11 (a-tail) or J1 = (L0 minus row/col 0) + e11.
IntMatrix base_matrix(const TailFamily& fam, long k) {
  if (fam.kind == TailKind::a_tail) return k == 0 ? fam.L0.minor(0, 0) : bump_first(fam.L0);
  const IntMatrix k0 = fam.L0.minor(0, 0);
  return k == 0 ? k0.minor(0, 0) : bump_first(k0);
}

LaurentPoly laurent_power(long k) { return LaurentPoly::monomial(1, k); }

}  // namespace

TailFamily tail_family(const IntMatrix& L0, TailKind kind) {
  if (!L0.is_square()) fail(ErrorKind::shape, "seed matrix is not square");
  const std::size_t need = kind == TailKind::fork_tail ? 2 : 1;
  if (L0.rows() < need)
    fail(ErrorKind::shape, to_string(kind) + " seed needs at least " + std::to_string(need) +
                               " row(s)");
  for (std::size_t i = 0; i < L0.rows(); ++i)
    for (std::size_t j = 0; j < L0.cols(); ++j) {
      if (L0(i, j) != L0(j, i)) fail(ErrorKind::shape, "seed matrix is not symmetric");
      if (L0(i, j) < 0) fail(ErrorKind::shape, "seed matrix has a negative entry");
    }

  TailFamily fam;
  fam.kind = kind;
  fam.L0 = L0;
  fam.P0 = algebra::char_poly_in_q(base_matrix(fam, 0));
  fam.P1 = algebra::char_poly_in_q(base_matrix(fam, 1));
  const LaurentPoly num = fam.P1 - fam.P0 * laurent_power(-1);
  const LaurentPoly den = fam.P1 - fam.P0 * laurent_power(1);
  fam.P = RationalFunction::from_laurent(num, den);
  return fam;
}

RationalFunction family_theta(const TailFamily& fam, long k) {
  if (k < 0) fail(ErrorKind::range, "family index must be nonnegative");
  const RationalFunction one(1);
  const RationalFunction q = RationalFunction::power(1);
  const RationalFunction& P = fam.P;
  if (fam.kind == TailKind::a_tail) {
    RationalFunction t = (one - P * RationalFunction::power(2 * k)) /
                         (one - P * RationalFunction::power(2 * k + 1));
    return series::theta_from_t(t);
  }
  RationalFunction shifted = (one - P * RationalFunction::power(2 * k + 1)) /
                             ((one + P * RationalFunction::power(2 * k)) * (one + q));
  return q + shifted;
}

FamilyCheck verify_family(const TailFamily& fam,
                          const std::function<graphs::BipartiteGraph(long)>& builder,
                          long k_max) {
  for (long k = 0; k <= k_max; ++k) {
    auto direct = series::jones_theta(series::poincare_resolvent(graphs::decompose(builder(k))));
    if (!algebra::ratfun_equal(family_theta(fam, k), direct)) return {false, k};
  }
  return {};
}

IntMatrix p_matrix(const TailFamily& fam, long k) {
  if (k < 0) fail(ErrorKind::range, "family index must be nonnegative");
  IntMatrix m = base_matrix(fam, k == 0 ? 0 : 1);
  for (long i = 1; i < k; ++i) m = border(2, m);
  return m;
}

IntMatrix q_matrix(const TailFamily& fam, long k) {
  if (fam.kind == TailKind::a_tail) return k == 0 ? fam.L0 : border(1, p_matrix(fam, k));
  return k == 0 ? fam.L0.minor(0, 0) : border(1, p_matrix(fam, k));
}

IntMatrix r_matrix(const TailFamily& fam, long k) {
  if (fam.kind != TailKind::fork_tail) fail(ErrorKind::type, "R_k is defined for fork families only");
  if (k == 0) return fam.L0;
  const IntMatrix j = p_matrix(fam, k);
  const std::size_t n = j.rows() + 2;
  IntMatrix m(n, n);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) m(a, b) = 1;
    m(a, 2) = 1;
    m(2, a) = 1;
  }
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t c = 2; c < n; ++c) m(i, c) = j(i - 2, c - 2);
  return m;
}

RecursionTriple recursion_triple(const TailFamily& fam) {
  return {fam.P1 - fam.P0 * laurent_power(1), fam.P1 - fam.P0 * laurent_power(-1)};
}

RationalFunction RecursionTriple::p_k(long k) const {
  LaurentPoly num = p_plus * laurent_power(-k) - p_minus * laurent_power(k);
  LaurentPoly den = laurent_power(-1) - laurent_power(1);
  return RationalFunction::from_laurent(num, den);
}

RationalFunction RecursionTriple::q_k(long k) const {
  LaurentPoly num = p_plus * laurent_power(-k) - p_minus * laurent_power(k + 1);
  return RationalFunction::from_laurent(num, LaurentPoly(Poly{1, -1}));
}

RationalFunction RecursionTriple::r_k(long k) const {
  LaurentPoly num = p_plus * laurent_power(-k) + p_minus * laurent_power(k);
  LaurentPoly one_plus_q_sq(Poly{1, 2, 1});
  return RationalFunction::from_laurent(num * one_plus_q_sq, laurent_power(1));
}

namespace {

IntMatrix ones(std::size_t n) { return IntMatrix(n, n, BigInt(1)); }

}  // namespace

const std::vector<NamedSeed>& named_seeds() {
  static const std::vector<NamedSeed> seeds = [] {
    std::vector<NamedSeed> s;
    auto add = [&](std::string name, std::string family, TailKind kind, IntMatrix L0,
                   std::function<GraphName(long)> member) {
      s.push_back({std::move(name), std::move(family), kind, std::move(L0), std::move(member)});
    };
    const auto A = TailKind::a_tail;
    const auto F = TailKind::fork_tail;
    add("a-even", "A(2k+2)", A, ones(1), [](long k) { return GraphName::A(2 * k + 2); });
    add("a-odd", "A(2k+3)", A, ones(2), [](long k) { return GraphName::A(2 * k + 3); });
    add("d-odd", "D(2k+3)", A, IntMatrix{{2}}, [](long k) { return GraphName::D(2 * k + 3); });
    add("d-even", "D(2k+4)", A, ones(3), [](long k) { return GraphName::D(2 * k + 4); });
    add("d1ext-even", "D1ext(2k+4)", F, ones(4),
        [](long k) { return GraphName::D1ext(2 * k + 4); });
    add("d1ext-odd", "D1ext(2k+5)", F, IntMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 3}},
        [](long k) { return GraphName::D1ext(2 * k + 5); });
    add("f21-even", "F(2,1,2k)", A, IntMatrix{{2, 1}, {1, 1}},
        [](long k) { return GraphName::F(2, 1, 2 * k); });
    add("f21-odd", "F(2,1,2k+1)", A, IntMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 2}},
        [](long k) { return GraphName::F(2, 1, 2 * k + 1); });
    add("f22-even", "F(2,2,2k)", A, IntMatrix{{2, 1, 1}, {1, 1, 0}, {1, 0, 1}},
        [](long k) { return GraphName::F(2, 2, 2 * k); });
    add("f31-odd", "F(3,1,2k+1)", A,
        IntMatrix{{1, 1, 1, 0}, {1, 1, 1, 0}, {1, 1, 2, 1}, {0, 0, 1, 1}},
        [](long k) { return GraphName::F(3, 1, 2 * k + 1); });
    return s;
  }();
  return seeds;
}

const NamedSeed& find_seed(const std::string& name) {
  for (const auto& s : named_seeds())
    if (s.name == name) return s;
  fail(ErrorKind::catalog, "unknown seed '" + name + "'");
}

}  // namespace adespec::recursion
