#include "zdg/exact.hpp"

#include <stdexcept>


namespace zdg {

namespace mp = boost::multiprecision;

namespace {

struct BareissResult {
  std::size_t rank = 0;
  BigInt last_pivot = 1;
  bool odd_swaps = false;
};

BareissResult bareiss(Matrix<BigInt>& a) {
  BareissResult out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      a.swap_rows(pivot, r);
      out.odd_swaps = !out.odd_swaps;
    }
    const BigInt p = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt lead = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        // Exact by Sylvester's identity: every entry is a minor of the input.
        a(i, j) = (a(i, j) * p - lead * a(r, j)) / previous;
      }
      a(i, c) = 0;
    }
    previous = p;
    ++r;
  }
  out.rank = r;
  out.last_pivot = previous;
  return out;
}

}  // namespace

Matrix<BigInt> clear_denominators(const Matrix<Rational>& m) {
  Matrix<BigInt> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt lcm = 1;
    for (const auto& x : m.row(r)) {
      const BigInt den = mp::denominator(x);
      lcm = lcm / mp::gcd(lcm, den) * den;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(r, c) = BigInt(mp::numerator(m(r, c))) * (lcm / BigInt(mp::denominator(m(r, c))));
    }
  }
  return out;
}

std::size_t exact_rank(const Matrix<BigInt>& m) {
  Matrix<BigInt> work = m;
  return bareiss(work).rank;
}

std::size_t exact_rank(const Matrix<Rational>& m) {
  Matrix<BigInt> work = clear_denominators(m);
  return bareiss(work).rank;
}

BigInt exact_determinant(const Matrix<BigInt>& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  Matrix<BigInt> work = m;
  const BareissResult res = bareiss(work);
  if (res.rank < m.rows()) return 0;
  return res.odd_swaps ? BigInt(-res.last_pivot) : res.last_pivot;
}

Rational exact_determinant(const Matrix<Rational>& m) {
  return field_determinant(m);
}

}  // namespace zdg
