#pragma once

#include "trigon/mpoly.hpp"
#include "trigon/upoly.hpp"

#include <vector>

namespace trigon {

// Determinant of the Sylvester matrix of f and g viewed as polynomials in
// `var`. If exactly one of them is constant in var, the result follows
// Res(f, c) = c^deg(f). Both constant in var is InvalidInput.
MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var);

// Polynomial in y whose coefficients are univariate polynomials in x;
// entry k is the coefficient of y^k.
using BiPoly = std::vector<UPoly>;

BiPoly to_bipoly(const MPoly& p, std::size_t xvar, std::size_t yvar);

// Sylvester resultant with respect to y of two bivariate polynomials.
UPoly resultant_y(const BiPoly& f, const BiPoly& g);

// Fraction-free (Bareiss) determinant over a ring with exact division.
template <class R, class ExactDiv>
R bareiss_determinant(std::vector<std::vector<R>> m, const R& zero, const R& one, ExactDiv exact_div) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  R prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return zero;
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R t = m[i][j] * m[k][k];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) t = t - m[i][k] * m[k][j];
        m[i][j] = exact_div(t, prev);
      }
      m[i][k] = zero;
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? zero - det : det;
}

} // namespace trigon
