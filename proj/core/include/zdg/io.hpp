#pragma once

// Text renderings: CSV and JSON for matrices, DOT/CSV/JSON for graphs and the
// JSON spectral report. All output is deterministic for fixed input.

#include <optional>
#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/matrix.hpp"
#include "zdg/numeric.hpp"
#include "zdg/spectra.hpp"

namespace zdg {

/// One row per line, comma-separated decimal integers, trailing newline.
std::string matrix_csv(const Matrix<BigInt>& m);
std::string matrix_csv(const Matrix<std::int64_t>& m);

/// Array of arrays of decimal strings.
std::string matrix_json(const Matrix<BigInt>& m, int indent = -1);

/// Aligned plain-text rendering.
std::string matrix_text(const Matrix<BigInt>& m);

/// Undirected DOT graph; vertices named by coordinate labels, each partition
/// cell emitted as a rank=same subgraph.
std::string graph_dot(const SupportGraph& g, std::string_view name);
std::string adjacency_csv(const SupportGraph& g);
/// {m, n, vertices: [labels], edges: [[i, j], ...]} with i < j.
std::string graph_json(const SupportGraph& g, int indent = -1);

/// One entry of the JSON report; `spectrum` is empty when the dense analysis
/// was skipped (see `spectrum_note`).
struct ReportDocument {
  SpectralSource source;
  std::optional<SpectralReport> spectrum;
  std::string spectrum_note;
  std::optional<PredictedSpectrum> predicted;  ///< full graph only
  std::vector<double> predicted_main;          ///< eigenvalues of P (full) or Q (bipartite)
  VerificationReport checks;
};

std::string report_json(const std::vector<ReportDocument>& docs, int indent = 2);

}  // namespace zdg
