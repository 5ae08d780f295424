#include "cli/suite.hpp"

#include <set>

#include "zdg/error.hpp"
#include "zdg/exact.hpp"
#include "zdg/fib.hpp"

namespace zdg::cli {

namespace {

Check make(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, pass ? 0.0 : 1.0, pass ? std::string{} : std::move(detail)};
}

std::string prefix(QuotientKind kind) { return std::string(zdg::to_string(kind)) + "."; }

}  // namespace

VerificationReport fib_checks(std::int64_t m, std::int64_t max_index) {
  VerificationReport out;
  bool docagne = true;
  std::string witness;
  for (std::int64_t l = 1; l <= max_index && docagne; ++l)
    for (std::int64_t r = 0; r < l; ++r)
      if (!docagne_residual(m, l, r).is_zero()) {
        docagne = false;
        witness = "l=" + std::to_string(l) + " r=" + std::to_string(r);
        break;
      }
  out.checks.push_back(make("fib.docagne_residual_zero", docagne, witness));

  const FibSequence f(m);
  std::set<Rational> ratios;
  for (std::int64_t k = 0; k <= max_index; ++k) ratios.insert(f.ratio(static_cast<std::uint64_t>(k)));
  out.checks.push_back(make("fib.gamma_distinct",
                            ratios.size() == static_cast<std::size_t>(max_index + 1),
                            "repeated ratio among gamma_0..gamma_" + std::to_string(max_index)));
  return out;
}

VerificationReport quotient_checks(QuotientKind kind, std::int64_t m, std::int64_t n) {
  VerificationReport out;
  const std::string p = prefix(kind);
  const QuotientMatrix b = build_quotient(kind, m, n);
  const std::size_t order = b.order();

  bool sums = true;
  bool support = true;
  for (std::size_t i = 1; i <= order; ++i) {
    BigInt sum = 0;
    for (std::size_t j = 1; j <= order; ++j) {
      sum += b.at(i, j);
      const bool inside = i + j >= static_cast<std::size_t>(n);
      if (inside == b.at(i, j).is_zero()) support = false;
    }
    const BigInt expected = kind == QuotientKind::P
                                ? ipow(BigInt(m), i) - 1
                                : BigInt(m - 1) * ipow(BigInt(m), i - 1);
    if (sum != expected) sums = false;
  }
  out.checks.push_back(make(p + "row_sums", sums));
  out.checks.push_back(make(p + "anti_triangular_support", support));

  const WalkMatrix iterative = walk_matrix_iterative(b);
  const WalkMatrix closed = walk_matrix_closed(kind, m, n);
  out.checks.push_back(make(p + "closed_form_equals_iteration", closed.entries == iterative.entries));

  const std::size_t rank = exact_rank(iterative.entries);
  out.checks.push_back(make(p + "walk_rank_full", rank == order,
                            "rank " + std::to_string(rank) + " of order " + std::to_string(order)));

  const BigInt det = exact_determinant(iterative.entries);
  const Rational formula = det_walk_formula(m, n, kind);
  out.checks.push_back(make(p + "det_formula_matches", formula == Rational(det) && !det.is_zero(),
                            "det " + det.str() + " formula " + zdg::to_string(formula)));

  const WalkFactorization fact = factorize_walk(m, n, kind);
  const Matrix<Rational> walk_q =
      iterative.entries.map<Rational>([](const BigInt& x) { return Rational(x); });
  out.checks.push_back(make(p + "vdu_reconstructs_walk", fact.product() == walk_q));
  return out;
}

namespace {

VerificationReport common_graph_checks(const SupportGraph& g, QuotientKind kind,
                                       const BigInt& expected_count) {
  VerificationReport out;
  const std::string p = kind == QuotientKind::P ? "graph." : "bipartite.";
  const std::int64_t m = g.m();
  const std::int64_t n = g.n();

  out.checks.push_back(make(p + "vertex_count", BigInt(g.vertex_count()) == expected_count,
                            std::to_string(g.vertex_count()) + " vs " + expected_count.str()));

  const auto sizes = cell_sizes(kind, m, n);
  bool cells_ok = true;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (BigInt(g.cells()[i].size()) != sizes[i]) cells_ok = false;
  out.checks.push_back(make(p + "cell_sizes", cells_ok));

  try {
    const auto empirical = empirical_quotient(g);
    const auto closed = build_quotient(kind, m, n).entries();
    out.checks.push_back(make(p + "equitable_quotient_matches",
                              empirical.map<BigInt>([](std::int64_t x) { return BigInt(x); }) == closed));
  } catch (const NotEquitable& e) {
    out.checks.push_back(make(p + "equitable_quotient_matches", false, e.what()));
  }

  const std::size_t rank = krylov_rank(g);
  out.checks.push_back(make(p + "krylov_rank", rank == static_cast<std::size_t>(n - 1),
                            "rank " + std::to_string(rank)));
  return out;
}

}  // namespace

VerificationReport graph_checks(const ZeroDivisorGraph& g) {
  VerificationReport out = common_graph_checks(g, QuotientKind::P, graph_vertex_count(g.m(), g.n()));
  bool degrees = true;
  std::string witness;
  for (std::size_t v = 0; v < g.vertex_count() && degrees; ++v) {
    const BigInt expected = ipow(BigInt(g.m()), g.vertices()[v].zero_count()) - 1;
    if (BigInt(g.degree(v)) != expected) {
      degrees = false;
      witness = g.vertices()[v].label(g.m());
    }
  }
  out.checks.push_back(make("graph.degree_law", degrees, "vertex " + witness));
  return out;
}

VerificationReport graph_checks(const BipartiteSubgraph& g) {
  VerificationReport out =
      common_graph_checks(g, QuotientKind::Q, bipartite_vertex_count(g.m(), g.n()));
  bool independent = true;
  for (const auto* side : {&g.star_zero(), &g.zero_star()})
    for (std::size_t a = 0; a < side->size(); ++a)
      for (std::size_t b = a + 1; b < side->size(); ++b)
        if (g.adjacent((*side)[a], (*side)[b])) independent = false;
  const BigInt half = BigInt(g.m() - 1) * ipow(BigInt(g.m()), static_cast<std::uint64_t>(g.n() - 2));
  out.checks.push_back(make("bipartite.sides_independent", independent));
  out.checks.push_back(make("bipartite.side_sizes", BigInt(g.star_zero().size()) == half &&
                                                        BigInt(g.zero_star().size()) == half));
  return out;
}

CellResult run_cell(std::int64_t m, std::int64_t n, const RunConfig& config) {
  CellResult cell{m, n, {}, {}};
  auto& rep = cell.report;
  auto guarded = [&](const std::string& stage, auto&& body) {
    try {
      body();
    } catch (const SizeCapExceeded& e) {
      cell.notes.push_back(stage + " skipped: " + e.what());
    } catch (const std::exception& e) {
      rep.checks.push_back(make(stage, false, e.what()));
    }
  };

  guarded("fib", [&] { rep.append(fib_checks(m, 2 * n + 2)); });
  guarded("quotient.P", [&] { rep.append(quotient_checks(QuotientKind::P, m, n)); });
  guarded("quotient.Q", [&] { rep.append(quotient_checks(QuotientKind::Q, m, n)); });
  if (n <= 10)
    guarded("q_exact", [&] { rep.append(q_eigen_exact_check(m, n)); });
  else
    cell.notes.push_back("exact annihilation skipped: n > 10");

  guarded("graph", [&] {
    const auto g = build_graph(m, n, config.limits);
    rep.append(graph_checks(g));
    const auto h = build_bipartite(m, n, config.limits);
    rep.append(graph_checks(h));
    guarded("dense", [&] {
      const auto full = analyze_graph(g, GraphKind::Full, config.tolerances, config.limits);
      const auto bip = analyze_graph(h, GraphKind::Bipartite, config.tolerances, config.limits);
      rep.append(verify_spectrum_theorem(full, config.match_tolerance, config.tolerances));
      rep.append(verify_main_correspondences(full, bip, config.match_tolerance, config.tolerances));
      rep.checks.push_back(make("classification_matches_krylov",
                                full.report.main_count() == full.krylov_rank &&
                                    bip.report.main_count() == bip.krylov_rank));
    });
  });
  return cell;
}

}  // namespace zdg::cli
