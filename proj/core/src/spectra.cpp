#include "zdg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "zdg/error.hpp"
#include "zdg/exact.hpp"

namespace zdg {

double Tolerances::grouping_gap(double frobenius) const {
  return std::max(grouping_gap_floor, grouping_gap_relative * frobenius);
}

std::string_view to_string(GraphKind kind) {
  return kind == GraphKind::Full ? "full" : "bipartite";
}

std::size_t SpectralReport::vertex_count() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

std::size_t SpectralReport::main_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.is_main; }));
}

std::vector<double> SpectralReport::main_eigenvalues() const {
  std::vector<double> out;
  for (const auto& e : entries)
    if (e.is_main) out.push_back(e.value);
  return out;
}

std::vector<double> SpectralReport::non_main_eigenvalues() const {
  std::vector<double> out;
  for (const auto& e : entries)
    if (!e.is_main) out.push_back(e.value);
  return out;
}

std::vector<std::pair<double, std::size_t>> group_eigenvalues(const std::vector<double>& ascending,
                                                              double gap) {
  std::vector<std::pair<double, std::size_t>> groups;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= ascending.size(); ++k) {
    if (k < ascending.size() && ascending[k] - ascending[k - 1] < gap) continue;
    double sum = 0.0;
    for (std::size_t t = start; t < k; ++t) sum += ascending[t];
    if (k > start) groups.emplace_back(sum / static_cast<double>(k - start), k - start);
    start = k;
  }
  return groups;
}

SpectralReport classify_main(const EigenDecomposition& eig, const Tolerances& tol,
                             SpectralSource source) {
  SpectralReport out;
  out.source = source;
  out.grouping_gap = tol.grouping_gap(eig.frobenius);
  out.projection_threshold = tol.projection_threshold;

  const std::size_t n = eig.values.size();
  if (n == 0) return out;
  const double unit = 1.0 / std::sqrt(static_cast<double>(n));

  std::size_t k = 0;
  for (const auto& [value, count] : group_eigenvalues(eig.values, out.grouping_gap)) {
    double sq = 0.0;
    for (std::size_t t = k; t < k + count; ++t) {
      double dot = 0.0;
      for (double x : eig.vectors.row(t)) dot += x;
      dot *= unit;
      sq += dot * dot;
    }
    k += count;
    const double projection = std::sqrt(sq);
    if (projection <= tol.projection_threshold && projection >= 0.1 * tol.projection_threshold)
      throw AmbiguousClassification(value, projection);
    out.entries.push_back({value, count, projection > tol.projection_threshold, projection});
  }
  return out;
}

SpectralReport classify_main(const Matrix<double>& a, const Tolerances& tol,
                             SpectralSource source) {
  return classify_main(symmetric_eigen(a, tol.eigen_convergence, tol.max_sweeps), tol, source);
}

SpectralReport classify_main(const Matrix<std::int64_t>& adjacency, const Tolerances& tol,
                             SpectralSource source) {
  return classify_main(adjacency.map<double>([](std::int64_t x) { return static_cast<double>(x); }),
                       tol, source);
}

namespace {

using Apply = std::function<std::vector<BigInt>(const std::vector<BigInt>&)>;

std::size_t krylov_rank_impl(std::size_t order, const Apply& apply,
                             std::optional<std::size_t> max_columns) {
  if (order == 0) return 0;
  const std::size_t cap = std::max<std::size_t>(1, max_columns.value_or(order));
  std::vector<std::vector<BigInt>> basis{std::vector<BigInt>(order, BigInt(1))};
  std::size_t rank = 1;
  while (basis.size() < cap) {
    basis.push_back(apply(basis.back()));
    Matrix<BigInt> k(basis.size(), order);
    for (std::size_t r = 0; r < basis.size(); ++r)
      std::copy(basis[r].begin(), basis[r].end(), k.row(r).begin());
    const std::size_t next = exact_rank(k);
    if (next == rank) break;
    rank = next;
  }
  return rank;
}

}  // namespace

std::size_t krylov_rank(const Matrix<std::int64_t>& a, std::optional<std::size_t> max_columns) {
  if (!a.square()) throw InvalidArgument("krylov_rank: matrix is not square");
  const Apply apply = [&a](const std::vector<BigInt>& v) {
    std::vector<BigInt> out(v.size(), BigInt(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto row = a.row(i);
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (row[j] != 0) out[i] += row[j] * v[j];
    }
    return out;
  };
  return krylov_rank_impl(a.rows(), apply, max_columns);
}

std::size_t krylov_rank(const SupportGraph& g, std::optional<std::size_t> max_columns) {
  const auto neighbours = g.neighbour_lists();
  const Apply apply = [&neighbours](const std::vector<BigInt>& v) {
    std::vector<BigInt> out(v.size(), BigInt(0));
    for (std::size_t i = 0; i < neighbours.size(); ++i)
      for (std::size_t j : neighbours[i]) out[i] += v[j];
    return out;
  };
  return krylov_rank_impl(g.vertex_count(), apply, max_columns);
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& b, const Tolerances& tol) {
  const auto sizes = cell_sizes(b.kind(), b.m(), b.n());
  const std::size_t r = b.order();
  Matrix<double> s(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      s(i, j) = to_double(b.entries()(i, j)) *
                std::sqrt(to_double(sizes[i]) / to_double(sizes[j]));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const double avg = 0.5 * (s(i, j) + s(j, i));
      s(i, j) = s(j, i) = avg;
    }
  return symmetric_eigen(s, tol.eigen_convergence, tol.max_sweeps).values;
}

std::uint64_t PredictedSpectrum::total_multiplicity() const {
  std::uint64_t total = p_eigenvalues.size() + zero_multiplicity;
  for (const auto& q : q_derived) total += q.multiplicity;
  return total;
}

std::vector<std::pair<double, std::uint64_t>> PredictedSpectrum::multiset(double gap) const {
  std::vector<std::pair<double, std::uint64_t>> raw;
  for (double v : p_eigenvalues) raw.emplace_back(v, 1);
  for (const auto& q : q_derived) raw.emplace_back(q.value, q.multiplicity);
  if (zero_multiplicity > 0) raw.emplace_back(0.0, zero_multiplicity);
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<double, std::uint64_t>> merged;
  for (const auto& [v, k] : raw) {
    if (!merged.empty() && v - merged.back().first < gap)
      merged.back().second += k;
    else
      merged.emplace_back(v, k);
  }
  return merged;
}

PredictedSpectrum predicted_spectrum(std::int64_t m, std::int64_t n, const Tolerances& tol) {
  PredictedSpectrum out;
  out.m = m;
  out.n = n;
  out.p_eigenvalues = quotient_eigenvalues(build_p(m, n), tol);
  const auto [phi, xi] = golden_pair(m);
  const auto row = pascal_row(static_cast<std::uint64_t>(n));
  for (std::int64_t i = 1; i < n; ++i) {
    QuadraticNumber value = phi.pow(static_cast<std::uint64_t>(i)) *
                            xi.pow(static_cast<std::uint64_t>(n - i));
    const double real = value.to_double();
    out.q_derived.push_back({i, std::move(value), real,
                             static_cast<std::uint64_t>(to_int64(row[static_cast<std::size_t>(i)] - 1))});
  }
  const BigInt zeros = graph_vertex_count(m, n) - ipow(BigInt(2), static_cast<std::uint64_t>(n)) + 2;
  if (zeros < 0) throw IntegrityError("negative zero multiplicity");
  out.zero_multiplicity = static_cast<std::uint64_t>(to_int64(zeros));
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

GraphAnalysis analyze_graph(const SupportGraph& g, GraphKind kind, const Tolerances& tol,
                            const Limits& limits) {
  if (g.vertex_count() > limits.dense_cap)
    throw SizeCapExceeded("dense spectrum", g.vertex_count(), limits.dense_cap);
  GraphAnalysis out;
  out.source = {g.m(), g.n(), kind};
  out.vertex_count = g.vertex_count();
  const auto adjacency =
      adjacency_matrix(g).map<double>([](std::int64_t x) { return static_cast<double>(x); });
  out.eigen = symmetric_eigen(adjacency, tol.eigen_convergence, tol.max_sweeps);
  out.report = classify_main(out.eigen, tol, out.source);
  out.krylov_rank = krylov_rank(g);
  return out;
}

namespace {

std::string format_values(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(12);
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

/// Sorted lists of simple values equal within `tolerance`.
Check compare_sets(std::string name, std::vector<double> observed, std::vector<double> expected,
                   double tolerance) {
  std::sort(observed.begin(), observed.end());
  std::sort(expected.begin(), expected.end());
  Check c{std::move(name), false, 0.0, {}};
  if (observed.size() != expected.size()) {
    c.residual = std::numeric_limits<double>::infinity();
    c.detail = "count mismatch: observed " + format_values(observed) + " expected " +
               format_values(expected);
    return c;
  }
  for (std::size_t i = 0; i < observed.size(); ++i)
    c.residual = std::max(c.residual, std::abs(observed[i] - expected[i]));
  c.pass = c.residual <= tolerance;
  if (!c.pass)
    c.detail = "observed " + format_values(observed) + " expected " + format_values(expected);
  return c;
}

}  // namespace

VerificationReport verify_spectrum_theorem(const GraphAnalysis& full, double tolerance,
                                           const Tolerances& tol) {
  const std::int64_t m = full.source.m;
  const std::int64_t n = full.source.n;
  const PredictedSpectrum predicted = predicted_spectrum(m, n, tol);
  VerificationReport out;

  {
    Check c{"predicted_total_multiplicity", predicted.total_multiplicity() == full.vertex_count,
            std::abs(static_cast<double>(predicted.total_multiplicity()) -
                     static_cast<double>(full.vertex_count)),
            {}};
    if (!c.pass)
      c.detail = "predicted " + std::to_string(predicted.total_multiplicity()) + " vs " +
                 std::to_string(full.vertex_count) + " vertices";
    out.checks.push_back(std::move(c));
  }
  {
    const BigInt formula = ipow(BigInt(m), static_cast<std::uint64_t>(n)) -
                           ipow(BigInt(m - 1), static_cast<std::uint64_t>(n)) -
                           ipow(BigInt(2), static_cast<std::uint64_t>(n)) + 1;
    const bool boolean_ok = m != 2 || predicted.zero_multiplicity == 0;
    Check c{"zero_multiplicity_formula",
            formula == predicted.zero_multiplicity && boolean_ok, 0.0, {}};
    if (!c.pass) c.detail = "zero multiplicity " + std::to_string(predicted.zero_multiplicity);
    out.checks.push_back(std::move(c));
  }

  const auto expected = predicted.multiset(full.report.grouping_gap);
  const auto& observed = full.report.entries;
  Check c{"spectrum_multiset", true, 0.0, {}};
  std::vector<bool> used(observed.size(), false);
  for (const auto& [value, mult] : expected) {
    std::size_t best = observed.size();
    double best_gap = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < observed.size(); ++k) {
      const double d = std::abs(observed[k].value - value);
      if (d < best_gap) {
        best_gap = d;
        best = k;
      }
    }
    std::ostringstream os;
    os.precision(12);
    if (best == observed.size() || best_gap > tolerance) {
      c.pass = false;
      os << "predicted eigenvalue " << value << " (x" << mult << ") not observed; ";
    } else {
      used[best] = true;
      c.residual = std::max(c.residual, best_gap);
      if (observed[best].multiplicity != mult) {
        c.pass = false;
        os << "eigenvalue " << value << " multiplicity delta "
           << static_cast<long long>(observed[best].multiplicity) - static_cast<long long>(mult)
           << "; ";
      }
    }
    c.detail += os.str();
  }
  for (std::size_t k = 0; k < observed.size(); ++k)
    if (!used[k]) {
      c.pass = false;
      std::ostringstream os;
      os.precision(12);
      os << "unexpected eigenvalue " << observed[k].value << " (x" << observed[k].multiplicity
         << "); ";
      c.detail += os.str();
    }
  out.checks.push_back(std::move(c));
  return out;
}

VerificationReport verify_spectrum_theorem(std::int64_t m, std::int64_t n, double tolerance,
                                           const Tolerances& tol, const Limits& limits) {
  const auto g = build_graph(m, n, limits);
  return verify_spectrum_theorem(analyze_graph(g, GraphKind::Full, tol, limits), tolerance, tol);
}

VerificationReport verify_main_correspondences(const GraphAnalysis& full,
                                               const GraphAnalysis& bipartite, double tolerance,
                                               const Tolerances& tol) {
  const std::int64_t m = full.source.m;
  const std::int64_t n = full.source.n;
  VerificationReport out;

  const auto p_eigs = quotient_eigenvalues(build_p(m, n), tol);
  const auto q_eigs = quotient_eigenvalues(build_q(m, n), tol);
  out.checks.push_back(
      compare_sets("main_full_equals_eig_P", full.report.main_eigenvalues(), p_eigs, tolerance));
  out.checks.push_back(compare_sets("main_bipartite_equals_eig_Q",
                                    bipartite.report.main_eigenvalues(), q_eigs, tolerance));

  std::vector<double> nonzero_non_main;
  const double zero_band = std::max(tolerance, full.report.grouping_gap);
  for (double v : full.report.non_main_eigenvalues())
    if (std::abs(v) > zero_band) nonzero_non_main.push_back(v);
  std::vector<double> negated;
  for (double v : bipartite.report.main_eigenvalues()) negated.push_back(-v);
  out.checks.push_back(compare_sets("nonzero_non_main_full_equals_neg_main_bipartite",
                                    nonzero_non_main, negated, tolerance));

  const std::size_t expected = static_cast<std::size_t>(n - 1);
  Check counts{"main_counts_equal_krylov_rank", true, 0.0, {}};
  counts.pass = full.report.main_count() == expected && bipartite.report.main_count() == expected &&
                full.krylov_rank == expected && bipartite.krylov_rank == expected;
  if (!counts.pass)
    counts.detail = "main(full)=" + std::to_string(full.report.main_count()) +
                    " main(bipartite)=" + std::to_string(bipartite.report.main_count()) +
                    " krylov(full)=" + std::to_string(full.krylov_rank) +
                    " krylov(bipartite)=" + std::to_string(bipartite.krylov_rank) +
                    " expected=" + std::to_string(expected);
  out.checks.push_back(std::move(counts));
  return out;
}

VerificationReport verify_main_correspondences(std::int64_t m, std::int64_t n, double tolerance,
                                               const Tolerances& tol, const Limits& limits) {
  const auto g = build_graph(m, n, limits);
  const auto h = build_bipartite(m, n, limits);
  return verify_main_correspondences(analyze_graph(g, GraphKind::Full, tol, limits),
                                     analyze_graph(h, GraphKind::Bipartite, tol, limits),
                                     tolerance, tol);
}

VerificationReport q_eigen_exact_check(std::int64_t m, std::int64_t n) {
  if (n > 10) throw InvalidArgument("q_eigen_exact_check supports n <= 10");
  const QuotientMatrix q = build_q(m, n);
  const auto [phi, xi] = golden_pair(m);
  const std::size_t order = q.order();
  VerificationReport out;
  for (std::int64_t i = 1; i < n; ++i) {
    const QuadraticNumber shift =
        phi.pow(static_cast<std::uint64_t>(i)) * xi.pow(static_cast<std::uint64_t>(n - i));
    Matrix<QuadraticNumber> a(order, order);
    for (std::size_t r = 0; r < order; ++r)
      for (std::size_t c = 0; c < order; ++c) {
        a(r, c) = QuadraticNumber(Rational(q.entries()(r, c)));
        if (r == c) a(r, c) += shift;
      }
    const QuadraticNumber det = field_determinant(std::move(a));
    Check c{"det(Q + phi^" + std::to_string(i) + " xi^" + std::to_string(n - i) + " I) = 0",
            det.is_zero(), std::abs(det.to_double()), {}};
    c.detail = "shift " + shift.to_string() + ", det " + det.to_string();
    out.checks.push_back(std::move(c));
  }
  return out;
}

}  // namespace zdg
