#pragma once

// Zero-divisor graph of R_n = F_m x ... x F_m (n factors) and its induced
// bipartite subgraph on X_{*0} u X_{0*}.
//
// Two nonzero zero-divisors multiply to zero iff their supports (positions of
// nonzero coordinates) are disjoint, so the construction only needs zero
// patterns. It accepts any m >= 2; the ring reading requires m to be a prime
// power.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zdg/limits.hpp"
#include "zdg/matrix.hpp"
#include "zdg/numeric.hpp"

namespace zdg {

struct VertexTuple {
  std::vector<std::uint32_t> coords;
  std::uint64_t support = 0;  ///< bit p set iff coords[p] != 0

  std::size_t zero_count() const;

  /// Digits concatenated ("0101") when m <= 10, comma-joined otherwise.
  std::string label(std::int64_t m) const;
};

/// Partition cells, each a sorted list of vertex indices.
using Cells = std::vector<std::vector<std::size_t>>;

/// Vertex set plus support-disjointness adjacency. Edges are implied by the
/// support masks and only materialized on request.
class SupportGraph {
 public:
  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<VertexTuple>& vertices() const noexcept { return vertices_; }

  /// Cells ordered by ascending zero count: cells()[i-1] holds the vertices
  /// with exactly i zero coordinates, i = 1..n-1.
  const Cells& cells() const noexcept { return cells_; }

  bool adjacent(std::size_t u, std::size_t v) const {
    return u != v && (vertices_[u].support & vertices_[v].support) == 0;
  }

  std::size_t degree(std::size_t u) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::vector<std::size_t>> neighbour_lists() const;

 protected:
  SupportGraph(std::int64_t m, std::int64_t n, std::vector<VertexTuple> vertices);

 private:
  std::int64_t m_;
  std::int64_t n_;
  std::vector<VertexTuple> vertices_;
  Cells cells_;
};

class ZeroDivisorGraph : public SupportGraph {
 public:
  ZeroDivisorGraph(std::int64_t m, std::int64_t n, std::vector<VertexTuple> vertices)
      : SupportGraph(m, n, std::move(vertices)) {}
};

class BipartiteSubgraph : public SupportGraph {
 public:
  BipartiteSubgraph(std::int64_t m, std::int64_t n, std::vector<VertexTuple> vertices);

  /// Coordinate n-1 nonzero and coordinate n zero.
  const std::vector<std::size_t>& star_zero() const noexcept { return star_zero_; }
  /// Coordinate n-1 zero and coordinate n nonzero.
  const std::vector<std::size_t>& zero_star() const noexcept { return zero_star_; }

 private:
  std::vector<std::size_t> star_zero_;
  std::vector<std::size_t> zero_star_;
};

/// m^n - (m-1)^n - 1.
BigInt graph_vertex_count(std::int64_t m, std::int64_t n);
/// 2 (m-1) m^{n-2}.
BigInt bipartite_vertex_count(std::int64_t m, std::int64_t n);

/// Vertices in lexicographic coordinate order. Throws SizeCapExceeded when the
/// vertex count exceeds limits.size_cap, InvalidArgument for m < 2, n < 2 or
/// n > 63.
ZeroDivisorGraph build_graph(std::int64_t m, std::int64_t n, const Limits& limits = {});
BipartiteSubgraph build_bipartite(std::int64_t m, std::int64_t n, const Limits& limits = {});

/// Common neighbour-count matrix b_ij of an equitable partition. Throws
/// NotEquitable naming the first two disagreeing vertices.
Matrix<std::int64_t> empirical_quotient(const SupportGraph& g, const Cells& cells);
inline Matrix<std::int64_t> empirical_quotient(const SupportGraph& g) {
  return empirical_quotient(g, g.cells());
}

/// Dense symmetric 0/1 adjacency in vertex order.
Matrix<std::int64_t> adjacency_matrix(const SupportGraph& g);

}  // namespace zdg
