#pragma once

// The invariant battery shared by `report` and `verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "zdg/graph.hpp"
#include "zdg/quotient.hpp"
#include "zdg/spectra.hpp"

namespace zdg::cli {

/// D'Ocagne residuals and ratio distinctness for indices up to `max_index`.
VerificationReport fib_checks(std::int64_t m, std::int64_t max_index);

/// Row sums, support shape, closed form vs iteration, rank, determinant
/// formula and V*D*U reconstruction for one quotient kind.
VerificationReport quotient_checks(QuotientKind kind, std::int64_t m, std::int64_t n);

/// Vertex count, cell sizes, degree law, equitability against the closed-form
/// quotient and the sparse Krylov rank.
VerificationReport graph_checks(const ZeroDivisorGraph& g);
VerificationReport graph_checks(const BipartiteSubgraph& g);

struct CellResult {
  std::int64_t m = 0;
  std::int64_t n = 0;
  VerificationReport report;
  std::vector<std::string> notes;  ///< skipped stages
};

/// Never throws for cap overruns; they become notes. Unexpected errors are
/// recorded as failing checks.
CellResult run_cell(std::int64_t m, std::int64_t n, const RunConfig& config);

}  // namespace zdg::cli
