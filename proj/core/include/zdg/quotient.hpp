#pragma once

// Pascal-type quotient matrices P[m,n] and Q[m,n], their walk matrices and
// the Vandermonde factorization of those walk matrices.
//
// P[m,n] is the quotient of the zero-divisor graph of F_m^n under the
// partition by number of zero coordinates; Q[m,n] is the quotient of the
// induced bipartite subgraph. Both have order n-1. Entry indices below are
// 1-based as (i,j); storage is 0-based.

#include <cstdint>
#include <string_view>
#include <vector>

#include "zdg/matrix.hpp"
#include "zdg/numeric.hpp"

namespace zdg {

enum class QuotientKind { P, Q };

std::string_view to_string(QuotientKind kind);

class QuotientMatrix {
 public:
  QuotientMatrix(QuotientKind kind, std::int64_t m, std::int64_t n, Matrix<BigInt> entries);

  QuotientKind kind() const noexcept { return kind_; }
  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }
  std::size_t order() const noexcept { return entries_.rows(); }

  const Matrix<BigInt>& entries() const noexcept { return entries_; }

  /// 1-based access.
  const BigInt& at(std::size_t i, std::size_t j) const { return entries_(i - 1, j - 1); }

 private:
  QuotientKind kind_;
  std::int64_t m_;
  std::int64_t n_;
  Matrix<BigInt> entries_;
};

/// P[m,n](i,j) = C(i, n-j) (m-1)^{n-j} if i+j >= n, else 0.
QuotientMatrix build_p(std::int64_t m, std::int64_t n);

/// Q[m,n](i,j) = C(i-1, n-j-1) (m-1)^{n-j} if i+j >= n, else 0.
QuotientMatrix build_q(std::int64_t m, std::int64_t n);

QuotientMatrix build_quotient(QuotientKind kind, std::int64_t m, std::int64_t n);

/// Sizes of the partition cells the quotient was taken over: |D_i| for P,
/// |D'_i| for Q, i = 1..n-1. The quotient satisfies |V_i| b_ij = |V_j| b_ji.
std::vector<BigInt> cell_sizes(QuotientKind kind, std::int64_t m, std::int64_t n);

/// Columns e, Be, ..., B^{n-2} e of a quotient matrix B.
struct WalkMatrix {
  QuotientKind kind;
  std::int64_t m;
  std::int64_t n;
  Matrix<BigInt> entries;
};

WalkMatrix walk_matrix_iterative(const QuotientMatrix& b);

/// h_0 = 1, h_j = F_{m,j+1}^n - sum_{r<j} h_r F_{m,j-r}^n, for j = 0..max(n-3, 0).
std::vector<BigInt> h_coefficients(std::int64_t m, std::int64_t n);

/// Closed-form walk matrices, evaluated in integer form:
///   P: W(i,k+1) = F_k^{n-i} F_{k+1}^i - sum_{j<k} h_j F_{k-j-1}^{n-i} F_{k-j}^i
///   Q: W(i,k+1) = (m-1)^k F_k^{n-i-1} F_{k+1}^{i-1}
/// Throws IntegrityError if an entry comes out negative.
WalkMatrix walk_matrix_closed_p(std::int64_t m, std::int64_t n);
WalkMatrix walk_matrix_closed_q(std::int64_t m, std::int64_t n);
WalkMatrix walk_matrix_closed(QuotientKind kind, std::int64_t m, std::int64_t n);

/// W = V D U with V the Vandermonde matrix (row i, column k) = gamma_{m,k-1}^{i-1},
/// D diagonal and U upper unitriangular (identity for Q).
struct WalkFactorization {
  QuotientKind kind;
  std::int64_t m;
  std::int64_t n;
  std::vector<Rational> nodes;  ///< gamma_{m,0} .. gamma_{m,n-2}
  Matrix<Rational> vandermonde;
  Matrix<Rational> diagonal;
  Matrix<Rational> unitriangular;

  Matrix<Rational> product() const;
};

WalkFactorization factorize_walk(std::int64_t m, std::int64_t n, QuotientKind kind);

/// prod_{r<l} (gamma_l - gamma_r) * prod_k C_k gamma_k   (P, C_k = F_k^n)
/// prod_{r<l} (gamma_l - gamma_r) * prod_k C_k           (Q, C_k = (m-1)^k F_k^{n-2})
Rational det_walk_formula(std::int64_t m, std::int64_t n, QuotientKind kind);

/// prod_{r<l} (x_l - x_r).
Rational vandermonde_determinant(const std::vector<Rational>& nodes);

}  // namespace zdg
