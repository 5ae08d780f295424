#include "zdg/graph.hpp"

#include <bit>

#include "zdg/error.hpp"

namespace zdg {

std::size_t VertexTuple::zero_count() const {
  return coords.size() - static_cast<std::size_t>(std::popcount(support));
}

std::string VertexTuple::label(std::int64_t m) const {
  std::string out;
  for (std::size_t p = 0; p < coords.size(); ++p) {
    if (m > 10 && p != 0) out += ',';
    out += std::to_string(coords[p]);
  }
  return out;
}

SupportGraph::SupportGraph(std::int64_t m, std::int64_t n, std::vector<VertexTuple> vertices)
    : m_(m), n_(n), vertices_(std::move(vertices)), cells_(static_cast<std::size_t>(n - 1)) {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const std::size_t zeros = vertices_[v].zero_count();
    if (zeros == 0 || zeros >= static_cast<std::size_t>(n))
      throw IntegrityError("vertex " + vertices_[v].label(m) + " is not a nonzero zero-divisor");
    cells_[zeros - 1].push_back(v);
  }
}

std::size_t SupportGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < vertices_.size(); ++v) d += adjacent(u, v) ? 1 : 0;
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> SupportGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertices_.size(); ++u)
    for (std::size_t v = u + 1; v < vertices_.size(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::vector<std::size_t>> SupportGraph::neighbour_lists() const {
  std::vector<std::vector<std::size_t>> out(vertices_.size());
  for (const auto& [u, v] : edges()) {
    out[u].push_back(v);
    out[v].push_back(u);
  }
  return out;
}

BipartiteSubgraph::BipartiteSubgraph(std::int64_t m, std::int64_t n,
                                     std::vector<VertexTuple> vertices)
    : SupportGraph(m, n, std::move(vertices)) {
  const auto last = static_cast<std::size_t>(n - 1);
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    const auto& c = this->vertices()[v].coords;
    if (c[last - 1] != 0 && c[last] == 0)
      star_zero_.push_back(v);
    else if (c[last - 1] == 0 && c[last] != 0)
      zero_star_.push_back(v);
    else
      throw IntegrityError("vertex outside X_{*0} u X_{0*}");
  }
}

BigInt graph_vertex_count(std::int64_t m, std::int64_t n) {
  return ipow(BigInt(m), static_cast<std::uint64_t>(n)) -
         ipow(BigInt(m - 1), static_cast<std::uint64_t>(n)) - 1;
}

BigInt bipartite_vertex_count(std::int64_t m, std::int64_t n) {
  return 2 * BigInt(m - 1) * ipow(BigInt(m), static_cast<std::uint64_t>(n - 2));
}

namespace {

void require_graph_params(std::int64_t m, std::int64_t n) {
  if (m < 2) throw InvalidArgument("m must be >= 2, got " + std::to_string(m));
  if (n < 2) throw InvalidArgument("n must be >= 2, got " + std::to_string(n));
  if (n > 63) throw InvalidArgument("n must be <= 63 so supports fit one word");
}

void require_cap(const BigInt& count, const Limits& limits, const char* what) {
  if (count > limits.size_cap) {
    const std::uint64_t requested =
        count > BigInt(UINT64_MAX) ? UINT64_MAX : count.convert_to<std::uint64_t>();
    throw SizeCapExceeded(what, requested, limits.size_cap);
  }
}

/// Every coordinate tuple accepted by keep(), in lexicographic order.
template <typename Keep>
std::vector<VertexTuple> enumerate(std::int64_t m, std::int64_t n, Keep keep) {
  const auto len = static_cast<std::size_t>(n);
  const auto base = static_cast<std::uint32_t>(m);
  std::vector<VertexTuple> out;
  VertexTuple t{std::vector<std::uint32_t>(len, 0), 0};
  while (true) {
    if (keep(t)) out.push_back(t);
    // Odometer increment, last coordinate fastest.
    std::size_t p = len;
    while (p > 0) {
      --p;
      if (++t.coords[p] < base) {
        t.support |= std::uint64_t{1} << p;
        break;
      }
      t.coords[p] = 0;
      t.support &= ~(std::uint64_t{1} << p);
      if (p == 0) return out;
    }
  }
}

}  // namespace

ZeroDivisorGraph build_graph(std::int64_t m, std::int64_t n, const Limits& limits) {
  require_graph_params(m, n);
  require_cap(graph_vertex_count(m, n), limits, "zero-divisor graph");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  auto vertices = enumerate(m, n, [full](const VertexTuple& t) {
    return t.support != 0 && t.support != full;
  });
  return {m, n, std::move(vertices)};
}

BipartiteSubgraph build_bipartite(std::int64_t m, std::int64_t n, const Limits& limits) {
  require_graph_params(m, n);
  require_cap(bipartite_vertex_count(m, n), limits, "bipartite subgraph");
  const std::uint64_t a = std::uint64_t{1} << (n - 2);  // coordinate n-1
  const std::uint64_t b = std::uint64_t{1} << (n - 1);  // coordinate n
  auto vertices = enumerate(m, n, [a, b](const VertexTuple& t) {
    const bool ha = (t.support & a) != 0;
    const bool hb = (t.support & b) != 0;
    return ha != hb;
  });
  return {m, n, std::move(vertices)};
}

Matrix<std::int64_t> empirical_quotient(const SupportGraph& g, const Cells& cells) {
  const std::size_t r = cells.size();
  std::vector<std::size_t> cell_of(g.vertex_count(), r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t v : cells[c]) {
      if (v >= g.vertex_count() || cell_of[v] != r)
        throw InvalidArgument("cells do not partition the vertex set");
      cell_of[v] = c;
    }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (cell_of[v] == r) throw InvalidArgument("cells do not cover the vertex set");

  Matrix<std::int64_t> b(r, r, 0);
  std::vector<std::int64_t> counts(r);
  for (std::size_t i = 0; i < r; ++i) {
    bool first = true;
    std::size_t witness = 0;
    for (std::size_t u : cells[i]) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.adjacent(u, v)) ++counts[cell_of[v]];
      if (first) {
        for (std::size_t j = 0; j < r; ++j) b(i, j) = counts[j];
        witness = u;
        first = false;
        continue;
      }
      for (std::size_t j = 0; j < r; ++j)
        if (counts[j] != b(i, j)) throw NotEquitable(i + 1, j + 1, witness, b(i, j), u, counts[j]);
    }
  }
  return b;
}

Matrix<std::int64_t> adjacency_matrix(const SupportGraph& g) {
  const std::size_t v = g.vertex_count();
  Matrix<std::int64_t> a(v, v, 0);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (g.adjacent(i, j)) a(i, j) = 1;
  return a;
}

}  // namespace zdg
