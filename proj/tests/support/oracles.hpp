#pragma once

// Independent reference implementations. None of these call into zdg
// algorithms; they only share the BigInt/Rational/Matrix vocabulary types.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zdg/matrix.hpp"
#include "zdg/numeric.hpp"

namespace oracle {

using zdg::BigInt;
using zdg::Matrix;
using zdg::Rational;

inline BigInt choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt power(std::int64_t b, std::int64_t e) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= b;
  return r;
}

// Generalized Fibonacci by plain iteration.
inline BigInt fib(std::int64_t m, std::int64_t k) {
  BigInt a = 1, b = 1;
  for (std::int64_t i = 1; i < k; ++i) {
    BigInt c = b + (m - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

// Quotient matrices straight from their defining case formulas.
inline Matrix<BigInt> p_matrix(std::int64_t m, std::int64_t n) {
  Matrix<BigInt> out(n - 1, n - 1, 0);
  for (std::int64_t i = 1; i < n; ++i)
    for (std::int64_t j = 1; j < n; ++j)
      if (i + j >= n) out(i - 1, j - 1) = choose(i, n - j) * power(m - 1, n - j);
  return out;
}

inline Matrix<BigInt> q_matrix(std::int64_t m, std::int64_t n) {
  Matrix<BigInt> out(n - 1, n - 1, 0);
  for (std::int64_t i = 1; i < n; ++i)
    for (std::int64_t j = 1; j < n; ++j)
      if (i + j >= n) out(i - 1, j - 1) = choose(i - 1, n - j - 1) * power(m - 1, n - j);
  return out;
}

// Columns e, Be, ..., B^{k-1} e by repeated matrix-vector products.
inline Matrix<BigInt> walk(const Matrix<BigInt>& b) {
  const std::size_t k = b.rows();
  Matrix<BigInt> out(k, k, 0);
  std::vector<BigInt> v(k, 1);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < k; ++r) out(r, c) = v[r];
    std::vector<BigInt> next(k, 0);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < k; ++s) next[r] += b(r, s) * v[s];
    v = std::move(next);
  }
  return out;
}

// Laplace expansion along the first row.
inline BigInt cofactor_det(const Matrix<BigInt>& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    Matrix<BigInt> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = a(r, cc);
    const BigInt term = a(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

// Rank by textbook Gaussian elimination over the rationals.
inline std::size_t rational_rank(const Matrix<BigInt>& in) {
  std::vector<std::vector<Rational>> a(in.rows(), std::vector<Rational>(in.cols()));
  for (std::size_t r = 0; r < in.rows(); ++r)
    for (std::size_t c = 0; c < in.cols(); ++c) a[r][c] = Rational(in(r, c));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < in.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t cc = c; cc < in.cols(); ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Multiplication in F_q for q prime or q = 4 (F_2[x]/(x^2+x+1), elements 0,1,x,x+1).
inline unsigned field_mul(unsigned q, unsigned a, unsigned b) {
  if (q == 4) {
    static const unsigned table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return table[a][b];
  }
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("oracle field must be prime or 4");
  return (a * b) % q;
}

struct BruteGraph {
  std::vector<std::vector<unsigned>> vertices;  // lexicographic
  std::vector<std::vector<int>> adj;
};

// Enumerates F_q^n, keeps nonzero zero-divisors, and joins x ~ y iff x*y = 0
// coordinatewise in the field. `keep` filters the vertex set (induced subgraph).
template <typename Keep>
BruteGraph brute_graph(unsigned q, unsigned n, Keep keep) {
  BruteGraph g;
  std::vector<unsigned> t(n, 0);
  for (;;) {
    const bool has_zero = std::count(t.begin(), t.end(), 0u) > 0;
    const bool has_nonzero = std::count(t.begin(), t.end(), 0u) < static_cast<long>(n);
    if (has_zero && has_nonzero && keep(t)) g.vertices.push_back(t);
    std::size_t p = n;
    while (p > 0 && ++t[p - 1] == q) t[--p] = 0;
    if (p == 0) break;
  }
  const std::size_t v = g.vertices.size();
  g.adj.assign(v, std::vector<int>(v, 0));
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) {
      bool zero = true;
      for (unsigned i = 0; i < n; ++i)
        zero = zero && field_mul(q, g.vertices[a][i], g.vertices[b][i]) == 0;
      g.adj[a][b] = g.adj[b][a] = zero ? 1 : 0;
    }
  return g;
}

inline BruteGraph brute_full(unsigned q, unsigned n) {
  return brute_graph(q, n, [](const std::vector<unsigned>&) { return true; });
}

inline BruteGraph brute_bipartite(unsigned q, unsigned n) {
  return brute_graph(q, n, [n](const std::vector<unsigned>& t) {
    return (t[n - 2] != 0) != (t[n - 1] != 0);
  });
}

inline Eigen::MatrixXd to_eigen(const Matrix<std::int64_t>& a) {
  Eigen::MatrixXd out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = static_cast<double>(a(r, c));
  return out;
}

inline Eigen::MatrixXd to_eigen(const Matrix<BigInt>& a) {
  Eigen::MatrixXd out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c).convert_to<double>();
  return out;
}

inline std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const auto& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

inline std::vector<double> general_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (std::abs(solver.eigenvalues()[i].imag()) > 1e-9)
      throw std::runtime_error("unexpected complex eigenvalue");
    out.push_back(solver.eigenvalues()[i].real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct MainSplit {
  std::vector<double> main;
  std::vector<double> non_main;  // distinct values
};

// Main eigenvalues from Eigen's eigenvectors: group by value, project e.
inline MainSplit main_split(const Eigen::MatrixXd& a, double gap = 1e-6, double thresh = 1e-6) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const auto& vals = solver.eigenvalues();
  const Eigen::MatrixXd& vecs = solver.eigenvectors();
  const Eigen::VectorXd e = Eigen::VectorXd::Ones(a.rows()) / std::sqrt(double(a.rows()));
  MainSplit out;
  Eigen::Index i = 0;
  while (i < vals.size()) {
    Eigen::Index j = i + 1;
    while (j < vals.size() && vals[j] - vals[j - 1] < gap) ++j;
    double proj = 0;
    for (Eigen::Index k = i; k < j; ++k) {
      const double d = vecs.col(k).dot(e);
      proj += d * d;
    }
    const double value = vals.segment(i, j - i).mean();
    (std::sqrt(proj) > thresh ? out.main : out.non_main).push_back(value);
    i = j;
  }
  return out;
}

// Exact rational rank of the full Krylov matrix [e, Ae, ..., A^{v-1} e].
// Only practical on small graphs.
inline std::size_t krylov_rank(const std::vector<std::vector<int>>& adj) {
  const std::size_t v = adj.size();
  Matrix<BigInt> k(v, v, 0);
  std::vector<BigInt> x(v, 1);
  for (std::size_t c = 0; c < v; ++c) {
    for (std::size_t r = 0; r < v; ++r) k(r, c) = x[r];
    std::vector<BigInt> y(v, 0);
    for (std::size_t r = 0; r < v; ++r)
      for (std::size_t s = 0; s < v; ++s)
        if (adj[r][s]) y[r] += x[s];
    x = std::move(y);
  }
  return rational_rank(k);
}

}  // namespace oracle
