#include "zdg/quotient.hpp"

#include "zdg/error.hpp"
#include "zdg/fib.hpp"

namespace zdg {

namespace {

void require_params(std::int64_t m, std::int64_t n) {
  if (m < 2) throw InvalidArgument("m must be >= 2, got " + std::to_string(m));
  if (n < 2) throw InvalidArgument("n must be >= 2, got " + std::to_string(n));
}

std::vector<std::vector<BigInt>> pascal_triangle(std::uint64_t rows) {
  std::vector<std::vector<BigInt>> t;
  t.reserve(rows + 1);
  for (std::uint64_t r = 0; r <= rows; ++r) t.push_back(pascal_row(r));
  return t;
}

BigInt choose(const std::vector<std::vector<BigInt>>& t, std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

}  // namespace

std::string_view to_string(QuotientKind kind) { return kind == QuotientKind::P ? "P" : "Q"; }

QuotientMatrix::QuotientMatrix(QuotientKind kind, std::int64_t m, std::int64_t n,
                               Matrix<BigInt> entries)
    : kind_(kind), m_(m), n_(n), entries_(std::move(entries)) {
  require_params(m, n);
  const auto order = static_cast<std::size_t>(n - 1);
  if (entries_.rows() != order || entries_.cols() != order)
    throw InvalidArgument("quotient matrix must have order n-1");
}

QuotientMatrix build_p(std::int64_t m, std::int64_t n) {
  require_params(m, n);
  const auto order = static_cast<std::size_t>(n - 1);
  const auto t = pascal_triangle(static_cast<std::uint64_t>(n));
  Matrix<BigInt> p(order, order, BigInt(0));
  for (std::int64_t i = 1; i < n; ++i)
    for (std::int64_t j = 1; j < n; ++j) {
      if (i + j < n) continue;
      p(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          choose(t, i, n - j) * ipow(BigInt(m - 1), static_cast<std::uint64_t>(n - j));
    }
  return {QuotientKind::P, m, n, std::move(p)};
}

QuotientMatrix build_q(std::int64_t m, std::int64_t n) {
  require_params(m, n);
  const auto order = static_cast<std::size_t>(n - 1);
  const auto t = pascal_triangle(static_cast<std::uint64_t>(n));
  Matrix<BigInt> q(order, order, BigInt(0));
  for (std::int64_t i = 1; i < n; ++i)
    for (std::int64_t j = 1; j < n; ++j) {
      if (i + j < n) continue;
      q(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          choose(t, i - 1, n - j - 1) * ipow(BigInt(m - 1), static_cast<std::uint64_t>(n - j));
    }
  return {QuotientKind::Q, m, n, std::move(q)};
}

QuotientMatrix build_quotient(QuotientKind kind, std::int64_t m, std::int64_t n) {
  return kind == QuotientKind::P ? build_p(m, n) : build_q(m, n);
}

std::vector<BigInt> cell_sizes(QuotientKind kind, std::int64_t m, std::int64_t n) {
  require_params(m, n);
  const auto t = pascal_triangle(static_cast<std::uint64_t>(n));
  std::vector<BigInt> sizes;
  for (std::int64_t i = 1; i < n; ++i) {
    const BigInt units = ipow(BigInt(m - 1), static_cast<std::uint64_t>(n - i));
    if (kind == QuotientKind::P) {
      sizes.push_back(choose(t, n, i) * units);
    } else {
      // Coordinate n-1 or n is the fixed unit; the other of the two is zero
      // and the remaining n-2 coordinates carry i-1 zeros.
      sizes.push_back(2 * choose(t, n - 2, i - 1) * units);
    }
  }
  return sizes;
}

WalkMatrix walk_matrix_iterative(const QuotientMatrix& b) {
  const std::size_t order = b.order();
  Matrix<BigInt> w(order, order);
  std::vector<BigInt> col(order, BigInt(1));
  for (std::size_t k = 0; k < order; ++k) {
    for (std::size_t i = 0; i < order; ++i) w(i, k) = col[i];
    if (k + 1 < order) col = b.entries() * col;
  }
  return {b.kind(), b.m(), b.n(), std::move(w)};
}

std::vector<BigInt> h_coefficients(std::int64_t m, std::int64_t n) {
  require_params(m, n);
  const FibSequence f(m);
  const auto un = static_cast<std::uint64_t>(n);
  const std::int64_t last = std::max<std::int64_t>(n - 3, 0);
  std::vector<BigInt> fn;  // F_k^n
  for (std::int64_t k = 0; k <= last + 1; ++k)
    fn.push_back(ipow(f.at(static_cast<std::uint64_t>(k)), un));
  std::vector<BigInt> h{1};
  for (std::int64_t j = 1; j <= last; ++j) {
    BigInt hj = fn[static_cast<std::size_t>(j + 1)];
    for (std::int64_t r = 0; r < j; ++r)
      hj -= h[static_cast<std::size_t>(r)] * fn[static_cast<std::size_t>(j - r)];
    h.push_back(std::move(hj));
  }
  return h;
}

namespace {

void require_non_negative(const Matrix<BigInt>& w, std::string_view what) {
  for (const auto& x : w.data())
    if (x < 0) throw IntegrityError(std::string(what) + ": negative walk count " + x.str());
}

}  // namespace

WalkMatrix walk_matrix_closed_p(std::int64_t m, std::int64_t n) {
  require_params(m, n);
  const auto order = static_cast<std::size_t>(n - 1);
  const FibSequence f(m);
  const auto h = h_coefficients(m, n);
  // term(l, i) = F_l^n gamma_l^i = F_l^{n-i} F_{l+1}^i
  auto term = [&](std::size_t l, std::size_t i) {
    return ipow(f.at(l), static_cast<std::uint64_t>(n) - i) * ipow(f.at(l + 1), i);
  };
  Matrix<BigInt> w(order, order);
  for (std::size_t i = 1; i <= order; ++i) {
    w(i - 1, 0) = 1;
    for (std::size_t k = 1; k < order; ++k) {
      BigInt entry = term(k, i);
      for (std::size_t j = 0; j < k; ++j) entry -= h[j] * term(k - j - 1, i);
      w(i - 1, k) = std::move(entry);
    }
  }
  require_non_negative(w, "closed-form W(P)");
  return {QuotientKind::P, m, n, std::move(w)};
}

WalkMatrix walk_matrix_closed_q(std::int64_t m, std::int64_t n) {
  require_params(m, n);
  const auto order = static_cast<std::size_t>(n - 1);
  const auto un = static_cast<std::uint64_t>(n);
  const FibSequence f(m);
  Matrix<BigInt> w(order, order);
  for (std::size_t i = 1; i <= order; ++i)
    for (std::size_t k = 0; k < order; ++k)
      w(i - 1, k) = ipow(BigInt(m - 1), k) * ipow(f.at(k), un - i - 1) * ipow(f.at(k + 1), i - 1);
  require_non_negative(w, "closed-form W(Q)");
  return {QuotientKind::Q, m, n, std::move(w)};
}

WalkMatrix walk_matrix_closed(QuotientKind kind, std::int64_t m, std::int64_t n) {
  return kind == QuotientKind::P ? walk_matrix_closed_p(m, n) : walk_matrix_closed_q(m, n);
}

namespace {

/// C_k for k = 0..n-2.
std::vector<Rational> scale_factors(const FibSequence& f, std::int64_t m, std::int64_t n,
                                    QuotientKind kind) {
  std::vector<Rational> c;
  for (std::int64_t k = 0; k <= n - 2; ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    if (kind == QuotientKind::P)
      c.emplace_back(ipow(f.at(uk), static_cast<std::uint64_t>(n)));
    else
      c.emplace_back(ipow(BigInt(m - 1), uk) * ipow(f.at(uk), static_cast<std::uint64_t>(n - 2)));
  }
  return c;
}

}  // namespace

Matrix<Rational> WalkFactorization::product() const { return vandermonde * diagonal * unitriangular; }

WalkFactorization factorize_walk(std::int64_t m, std::int64_t n, QuotientKind kind) {
  require_params(m, n);
  const auto order = static_cast<std::size_t>(n - 1);
  const FibSequence f(m);

  WalkFactorization out{kind, m, n, {}, Matrix<Rational>(order, order, Rational(0)),
                        Matrix<Rational>(order, order, Rational(0)),
                        Matrix<Rational>::identity(order)};
  for (std::size_t k = 0; k < order; ++k) out.nodes.push_back(f.ratio(k));

  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t k = 0; k < order; ++k) out.vandermonde(i, k) = ipow(out.nodes[k], i);

  const auto c = scale_factors(f, m, n, kind);
  for (std::size_t k = 0; k < order; ++k)
    out.diagonal(k, k) = kind == QuotientKind::P ? c[k] * out.nodes[k] : c[k];

  if (kind == QuotientKind::P) {
    // Column k of U is H_k = [-h_{k-1}, ..., -h_0, 1, 0, ...]^T.
    const auto h = h_coefficients(m, n);
    for (std::size_t k = 1; k < order; ++k)
      for (std::size_t r = 0; r < k; ++r) out.unitriangular(r, k) = Rational(-h[k - 1 - r]);
  }
  return out;
}

Rational vandermonde_determinant(const std::vector<Rational>& nodes) {
  Rational det = 1;
  for (std::size_t l = 0; l < nodes.size(); ++l)
    for (std::size_t r = 0; r < l; ++r) det *= nodes[l] - nodes[r];
  return det;
}

Rational det_walk_formula(std::int64_t m, std::int64_t n, QuotientKind kind) {
  require_params(m, n);
  const FibSequence f(m);
  std::vector<Rational> nodes;
  for (std::int64_t k = 0; k <= n - 2; ++k) nodes.push_back(f.ratio(static_cast<std::uint64_t>(k)));
  Rational det = vandermonde_determinant(nodes);
  const auto c = scale_factors(f, m, n, kind);
  for (std::size_t k = 0; k < c.size(); ++k)
    det *= kind == QuotientKind::P ? c[k] * nodes[k] : c[k];
  return det;
}

}  // namespace zdg
