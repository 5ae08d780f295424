#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zdg/exact.hpp"
#include "zdg/fib.hpp"

using namespace zdg;

namespace {

Matrix<BigInt> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo,
                             int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<BigInt> out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = d(rng);
  return out;
}

}  // namespace

TEST_CASE("Matrix: basics") {
  Matrix<int> a{{1, 2, 3}, {4, 5, 6}};
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a.transpose()(2, 1) == 6);
  CHECK(a.column(1) == std::vector<int>{2, 5});
  Matrix<int> b{{1, 0}, {0, 1}, {1, 1}};
  CHECK(a * b == Matrix<int>{{4, 5}, {10, 11}});
  CHECK(a * std::vector<int>{1, 1, 1} == std::vector<int>{6, 15});
  CHECK(Matrix<int>::identity(2) == Matrix<int>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(a * a, std::invalid_argument);
  CHECK_THROWS_AS((Matrix<int>{{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("exact_rank: worked examples") {
  CHECK(exact_rank(Matrix<BigInt>(3, 3, 0)) == 0);
  const Matrix<BigInt> wp{{1, 1, 7}, {1, 3, 17}, {1, 7, 31}};
  CHECK(exact_rank(wp) == 3);
  CHECK(exact_rank(Matrix<BigInt>{{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank(Matrix<Rational>{{Rational(1, 2), Rational(1, 3)}, {Rational(3), Rational(2)}}) == 1);
}

TEST_CASE("exact_rank: agrees with naive rational elimination") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    Matrix<BigInt> a = random_matrix(rng, rows, cols, -3, 3);
    // Force some dependence.
    if (rows > 2)
      for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = 2 * a(0, c) - a(1, c);
    CHECK(exact_rank(a) == oracle::rational_rank(a));
  }
}

TEST_CASE("exact_determinant: agrees with cofactor expansion") {
  CHECK(exact_determinant(Matrix<BigInt>{{1, 1, 7}, {1, 3, 17}, {1, 7, 31}}) == -12);
  CHECK(exact_determinant(Matrix<BigInt>{{1, 1, 4}, {1, 2, 6}, {1, 4, 9}}) == -1);
  CHECK(exact_determinant(Matrix<BigInt>{{0, 1}, {1, 0}}) == -1);
  CHECK(exact_determinant(Matrix<BigInt>(0, 0)) == 1);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix<BigInt> a = random_matrix(rng, n, n, -1000000, 1000000);
    CHECK(exact_determinant(a) == oracle::cofactor_det(a));
  }
}

TEST_CASE("exact_determinant: rationals and quadratic field") {
  const Matrix<Rational> r{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}};
  CHECK(exact_determinant(r) == Rational(1, 10) - Rational(1, 12));

  const QuadraticNumber s(0, 1, 5);
  const QuadraticNumber one(1);
  Matrix<QuadraticNumber> q{{one, s}, {s, QuadraticNumber(5)}};
  CHECK(field_determinant(q).is_zero());
  Matrix<QuadraticNumber> q2{{QuadraticNumber(0), one}, {one, s}};
  CHECK(field_determinant(q2) == QuadraticNumber(-1));
}

TEST_CASE("clear_denominators keeps row spaces") {
  const Matrix<Rational> r{{Rational(1, 2), Rational(1, 3)}, {Rational(2, 7), Rational(0)}};
  const auto c = clear_denominators(r);
  CHECK(c(0, 0) * 2 == c(0, 1) * 3);
  CHECK(c(1, 1) == 0);
  CHECK(exact_rank(c) == 2);
}
