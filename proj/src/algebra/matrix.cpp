#include "adespec/algebra/matrix.hpp"

#include <utility>

namespace adespec::algebra {

LaurentPoly poly_det(const LaurentMatrix& input) {
  if (!input.is_square())
    fail(ErrorKind::dimension, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return LaurentPoly(1);
  LaurentMatrix m = input;
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)).exact_div(prev);
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

LaurentPoly cofactor_det(const LaurentMatrix& m) {
  if (!m.is_square())
    fail(ErrorKind::dimension, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m(0, 0);
  LaurentPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    LaurentPoly term = m(0, j) * cofactor_det(m.minor(0, j));
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

LaurentPoly char_poly_in_q(const IntMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::dimension, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const LaurentPoly y = LaurentPoly::y_of_q();
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = (i == j ? y : LaurentPoly()) - LaurentPoly(Rational(a(i, j)));
  return poly_det(m);
}

Poly det_one_minus_x(const IntMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::dimension, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = LaurentPoly(i == j ? 1 : 0) - LaurentPoly::monomial(Rational(a(i, j)), 1);
  auto [p, shift] = poly_det(m).split();
  return p.shifted(static_cast<std::size_t>(shift));
}

}  // namespace adespec::algebra
