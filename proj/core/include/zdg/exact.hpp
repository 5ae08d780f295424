#pragma once

// Exact linear algebra over the integers, the rationals and generic fields.

#include <cstddef>
#include <utility>

#include "zdg/matrix.hpp"
#include "zdg/numeric.hpp"

namespace zdg {

/// Rank over Q by fraction-free (Bareiss) elimination. Pivot is the first
/// nonzero entry in column order, so the elimination is reproducible.
std::size_t exact_rank(const Matrix<BigInt>& m);
std::size_t exact_rank(const Matrix<Rational>& m);

/// Bareiss determinant; the final pivot is the determinant up to row-swap sign.
BigInt exact_determinant(const Matrix<BigInt>& m);
Rational exact_determinant(const Matrix<Rational>& m);

/// Clears denominators row by row (multiplies each row by the lcm of its
/// denominators). Rank is preserved.
Matrix<BigInt> clear_denominators(const Matrix<Rational>& m);

/// Determinant by Gaussian elimination over an exact field type F. F needs
/// + - * /, construction from int and an ADL-visible is_zero(const F&).
template <typename F>
F field_determinant(Matrix<F> a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != col) {
      a.swap_rows(pivot, col);
      det = -det;
    }
    const F inv = F(1) / a(col, col);
    det = det * a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const F factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) = a(r, c) - factor * a(col, c);
    }
  }
  return det;
}

}  // namespace zdg
