#pragma once

// Main / non-main eigenvalue classification, the exact Krylov-rank oracle and
// the spectral predictions for the zero-divisor graph family.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/eigen.hpp"
#include "zdg/fib.hpp"
#include "zdg/graph.hpp"
#include "zdg/limits.hpp"
#include "zdg/matrix.hpp"
#include "zdg/quotient.hpp"

namespace zdg {

struct Tolerances {
  double grouping_gap_floor = 1e-8;
  double grouping_gap_relative = 1e-9;
  double projection_threshold = 1e-7;
  double eigen_convergence = 1e-12;
  int max_sweeps = 100;

  /// Eigenvalues closer than this belong to one group.
  double grouping_gap(double frobenius) const;
};

enum class GraphKind { Full, Bipartite };

std::string_view to_string(GraphKind kind);

struct SpectralSource {
  std::int64_t m = 0;
  std::int64_t n = 0;
  GraphKind graph = GraphKind::Full;
};

struct SpectralEntry {
  double value;
  std::size_t multiplicity;
  bool is_main;
  double projection;  ///< norm of the unit all-one vector projected on the eigenspace
};

struct SpectralReport {
  SpectralSource source;
  std::vector<SpectralEntry> entries;  ///< strictly increasing values
  double grouping_gap = 0.0;
  double projection_threshold = 0.0;

  std::size_t vertex_count() const;
  std::size_t main_count() const;
  std::vector<double> main_eigenvalues() const;
  std::vector<double> non_main_eigenvalues() const;
};

/// Groups ascending eigenvalues into chains whose neighbours differ by less
/// than `gap`; returns (mean value, count) per chain.
std::vector<std::pair<double, std::size_t>> group_eigenvalues(const std::vector<double>& ascending,
                                                              double gap);

/// Throws AmbiguousClassification if any projection norm lands in
/// [0.1 * threshold, threshold].
SpectralReport classify_main(const EigenDecomposition& eig, const Tolerances& tol = {},
                             SpectralSource source = {});
SpectralReport classify_main(const Matrix<double>& a, const Tolerances& tol = {},
                             SpectralSource source = {});
SpectralReport classify_main(const Matrix<std::int64_t>& adjacency, const Tolerances& tol = {},
                             SpectralSource source = {});

/// Rank over Q of [e, Ae, A^2 e, ...], extending one column at a time until a
/// new column no longer raises the rank, or `max_columns` (default: order of A)
/// columns have been taken.
std::size_t krylov_rank(const Matrix<std::int64_t>& a,
                        std::optional<std::size_t> max_columns = std::nullopt);
/// Same on a graph's implicit adjacency, without forming the dense matrix.
std::size_t krylov_rank(const SupportGraph& g,
                        std::optional<std::size_t> max_columns = std::nullopt);

/// Eigenvalues (ascending) of a quotient matrix, via the similar symmetric
/// matrix N^{1/2} B N^{-1/2} with N the diagonal of cell sizes.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& b, const Tolerances& tol = {});

struct DerivedEigenvalue {
  std::int64_t index;  ///< i in phi^i xi^{n-i}
  QuadraticNumber exact;
  double value;
  std::uint64_t multiplicity;  ///< C(n,i) - 1
};

struct PredictedSpectrum {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::vector<double> p_eigenvalues;       ///< each simple
  std::vector<DerivedEigenvalue> q_derived;  ///< eigenvalues of -Q[m,n]
  std::uint64_t zero_multiplicity = 0;     ///< m^n - (m-1)^n - 2^n + 1, derived by counting

  std::uint64_t total_multiplicity() const;
  /// (value, multiplicity) pairs merged within `gap`, ascending.
  std::vector<std::pair<double, std::uint64_t>> multiset(double gap) const;
};

PredictedSpectrum predicted_spectrum(std::int64_t m, std::int64_t n, const Tolerances& tol = {});

struct Check {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(std::string_view name) const;
  void append(const VerificationReport& other);
};

/// Everything the spectral checks need about one explicit graph.
struct GraphAnalysis {
  SpectralSource source;
  std::size_t vertex_count = 0;
  EigenDecomposition eigen;
  SpectralReport report;
  std::size_t krylov_rank = 0;
};

/// Throws SizeCapExceeded when the graph has more than limits.dense_cap vertices.
GraphAnalysis analyze_graph(const SupportGraph& g, GraphKind kind, const Tolerances& tol = {},
                            const Limits& limits = {});

VerificationReport verify_spectrum_theorem(const GraphAnalysis& full, double tolerance,
                                           const Tolerances& tol = {});
VerificationReport verify_spectrum_theorem(std::int64_t m, std::int64_t n, double tolerance,
                                           const Tolerances& tol = {}, const Limits& limits = {});

VerificationReport verify_main_correspondences(const GraphAnalysis& full,
                                               const GraphAnalysis& bipartite, double tolerance,
                                               const Tolerances& tol = {});
VerificationReport verify_main_correspondences(std::int64_t m, std::int64_t n, double tolerance,
                                               const Tolerances& tol = {},
                                               const Limits& limits = {});

/// det(Q[m,n] + phi^i xi^{n-i} I) = 0 exactly in Q(sqrt(4m-3)), i = 1..n-1.
/// Requires n <= 10.
VerificationReport q_eigen_exact_check(std::int64_t m, std::int64_t n);

}  // namespace zdg
