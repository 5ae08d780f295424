#include "cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/config.hpp"
#include "cli/suite.hpp"
#include "zdg/error.hpp"
#include "zdg/exact.hpp"
#include "zdg/io.hpp"

namespace zdg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string kind = "p";
  std::string m = "";
  std::string n = "";
  std::string format;
  std::string what = "graph";
  std::string output;
  std::uint64_t size_cap = 0;
  std::uint64_t dense_cap = 0;
  double grouping_gap = Tolerances{}.grouping_gap_floor;
  double projection_threshold = Tolerances{}.projection_threshold;
  double eigen_convergence = Tolerances{}.eigen_convergence;
  double match_tolerance = 1e-8;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--size-cap", o.size_cap, "Maximum vertices for explicit graphs (env ZDG_SIZE_CAP)");
  cmd->add_option("--dense-cap", o.dense_cap,
                  "Maximum vertices for dense eigen-analysis (env ZDG_DENSE_CAP)");
  cmd->add_option("--grouping-gap", o.grouping_gap, "Absolute floor of the eigenvalue grouping gap");
  cmd->add_option("--projection-threshold", o.projection_threshold,
                  "Projection norm above which an eigenvalue is main");
  cmd->add_option("--eigen-convergence", o.eigen_convergence,
                  "Jacobi stop: off-diagonal norm relative to ||A||_F");
  cmd->add_option("--tolerance", o.match_tolerance, "Absolute tolerance for eigenvalue matching");
}

RunConfig make_config(const Options& o, Format fallback, bool ranges) {
  RunConfig config;
  config.limits = default_limits();
  if (o.size_cap) config.limits.size_cap = o.size_cap;
  if (o.dense_cap) config.limits.dense_cap = o.dense_cap;
  if (o.size_cap && !o.dense_cap && config.limits.dense_cap > config.limits.size_cap)
    config.limits.dense_cap = config.limits.size_cap;
  config.tolerances.grouping_gap_floor = o.grouping_gap;
  config.tolerances.projection_threshold = o.projection_threshold;
  config.tolerances.eigen_convergence = o.eigen_convergence;
  config.match_tolerance = o.match_tolerance;
  if (!o.m.empty()) config.m_range = parse_range(o.m);
  if (!o.n.empty()) config.n_range = parse_range(o.n);
  if (!ranges) {
    if (o.m.empty() || o.n.empty()) throw InvalidArgument("--m and --n are required");
    if (config.m_range.lo != config.m_range.hi || config.n_range.lo != config.n_range.hi)
      throw InvalidArgument("--m and --n take single values here");
  }
  config.format = fallback;
  if (!o.format.empty()) {
    const auto f = parse_format(o.format);
    if (!f) throw InvalidArgument("unknown format '" + o.format + "'");
    config.format = *f;
  }
  config.validate();
  return config;
}

// ---------------------------------------------------------------------------
// quotient

int cmd_quotient(const Options& o, std::ostream& out) {
  const RunConfig config = make_config(o, Format::Text, false);
  if (config.format == Format::Dot) throw InvalidArgument("quotient supports json, csv, text");
  QuotientKind kind;
  if (o.kind == "p" || o.kind == "P")
    kind = QuotientKind::P;
  else if (o.kind == "q" || o.kind == "Q")
    kind = QuotientKind::Q;
  else
    throw InvalidArgument("--kind must be p or q");
  const std::int64_t m = config.m_range.lo;
  const std::int64_t n = config.n_range.lo;

  const QuotientMatrix b = build_quotient(kind, m, n);
  const WalkMatrix iterative = walk_matrix_iterative(b);
  const WalkMatrix closed = walk_matrix_closed(kind, m, n);
  const std::size_t rank = exact_rank(iterative.entries);
  const BigInt det = exact_determinant(iterative.entries);
  const Rational formula = det_walk_formula(m, n, kind);
  const bool closed_ok = closed.entries == iterative.entries;
  const bool det_ok = formula == Rational(det);

  switch (config.format) {
    case Format::Csv:
      out << matrix_csv(b.entries()) << '\n'
          << matrix_csv(iterative.entries) << '\n'
          << "rank," << rank << '\n'
          << "det," << det << '\n'
          << "det_formula," << zdg::to_string(formula) << '\n'
          << "closed_form_matches_iteration," << (closed_ok ? "true" : "false") << '\n'
          << "det_formula_matches," << (det_ok ? "true" : "false") << '\n';
      break;
    case Format::Json: {
      Json j;
      j["kind"] = std::string(zdg::to_string(kind));
      j["m"] = m;
      j["n"] = n;
      j["matrix"] = Json::parse(matrix_json(b.entries()));
      j["walk_matrix"] = {{"iterative", Json::parse(matrix_json(iterative.entries))},
                          {"closed_form", Json::parse(matrix_json(closed.entries))}};
      j["rank"] = rank;
      j["determinant"] = det.str();
      j["det_formula"] = zdg::to_string(formula);
      j["checks"] = {{"closed_form_matches_iteration", closed_ok}, {"det_formula_matches", det_ok}};
      out << j.dump(2) << '\n';
      break;
    }
    default:
      out << zdg::to_string(kind) << "[" << m << "," << n << "]\n"
          << matrix_text(b.entries()) << "\nW(" << zdg::to_string(kind) << ") by iteration\n"
          << matrix_text(iterative.entries) << "\nW(" << zdg::to_string(kind) << ") closed form\n"
          << matrix_text(closed.entries) << "\nrank " << rank << "\ndet " << det
          << "\ndet formula " << zdg::to_string(formula) << "\nclosed form matches iteration: "
          << (closed_ok ? "yes" : "NO") << "\ndet formula matches: " << (det_ok ? "yes" : "NO")
          << '\n';
  }
  return closed_ok && det_ok ? kSuccess : kCheckFailure;
}

// ---------------------------------------------------------------------------
// report

std::string format_value(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void print_report_text(const std::vector<ReportDocument>& docs, std::ostream& out) {
  for (const auto& d : docs) {
    out << (d.source.graph == GraphKind::Full ? "Gamma" : "Gamma'") << "(R_" << d.source.n
        << "), m = " << d.source.m << '\n';
    if (d.spectrum) {
      for (const auto& e : d.spectrum->entries)
        out << "  " << std::setw(20) << format_value(e.value) << "  x" << e.multiplicity
            << (e.is_main ? "  main" : "") << '\n';
    } else {
      out << "  " << d.spectrum_note << '\n';
    }
    for (const auto& c : d.checks.checks)
      out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
  }
}

int cmd_report(const Options& o, std::ostream& out) {
  const RunConfig config = make_config(o, Format::Json, false);
  if (config.format != Format::Json && config.format != Format::Text)
    throw InvalidArgument("report supports json and text");
  const std::int64_t m = config.m_range.lo;
  const std::int64_t n = config.n_range.lo;
  const auto& tol = config.tolerances;

  // Size cap on explicit graphs is a hard refusal; the dense cap only skips
  // the eigen-analysis.
  const auto g = build_graph(m, n, config.limits);
  const auto h = build_bipartite(m, n, config.limits);

  ReportDocument full{{m, n, GraphKind::Full}, {}, {}, {}, {}, {}};
  ReportDocument bip{{m, n, GraphKind::Bipartite}, {}, {}, {}, {}, {}};

  full.checks.append(quotient_checks(QuotientKind::P, m, n));
  bip.checks.append(quotient_checks(QuotientKind::Q, m, n));
  full.checks.append(graph_checks(g));
  bip.checks.append(graph_checks(h));
  if (n <= 10) bip.checks.append(q_eigen_exact_check(m, n));

  full.predicted = predicted_spectrum(m, n, tol);
  full.predicted_main = full.predicted->p_eigenvalues;
  bip.predicted_main = quotient_eigenvalues(build_q(m, n), tol);

  std::optional<GraphAnalysis> full_analysis;
  std::optional<GraphAnalysis> bip_analysis;
  auto analyze = [&](const SupportGraph& graph, GraphKind kind, ReportDocument& doc,
                     std::optional<GraphAnalysis>& slot) {
    if (graph.vertex_count() > config.limits.dense_cap) {
      doc.spectrum_note = "dense spectrum skipped: " + std::to_string(graph.vertex_count()) +
                          " vertices exceeds dense cap " + std::to_string(config.limits.dense_cap);
      return;
    }
    slot = analyze_graph(graph, kind, tol, config.limits);
    doc.spectrum = slot->report;
  };
  analyze(g, GraphKind::Full, full, full_analysis);
  analyze(h, GraphKind::Bipartite, bip, bip_analysis);

  if (full_analysis) full.checks.append(verify_spectrum_theorem(*full_analysis, config.match_tolerance, tol));
  if (full_analysis && bip_analysis)
    full.checks.append(
        verify_main_correspondences(*full_analysis, *bip_analysis, config.match_tolerance, tol));

  const std::vector<ReportDocument> docs{full, bip};
  if (config.format == Format::Json)
    out << report_json(docs) << '\n';
  else
    print_report_text(docs, out);
  return full.checks.passed() && bip.checks.passed() ? kSuccess : kCheckFailure;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Options& o, std::ostream& out) {
  const RunConfig config = make_config(o, Format::Text, true);
  if (config.format != Format::Json && config.format != Format::Text)
    throw InvalidArgument("verify supports json and text");

  std::vector<CellResult> cells;
  for (std::int64_t m = config.m_range.lo; m <= config.m_range.hi; ++m)
    for (std::int64_t n = config.n_range.lo; n <= config.n_range.hi; ++n)
      cells.push_back(run_cell(m, n, config));

  bool all = true;
  for (const auto& c : cells) all = all && c.report.passed();

  if (config.format == Format::Json) {
    Json j = Json::array();
    for (const auto& c : cells) {
      Json cell;
      cell["m"] = c.m;
      cell["n"] = c.n;
      cell["pass"] = c.report.passed();
      Json failed = Json::array();
      for (const auto& chk : c.report.checks)
        if (!chk.pass) failed.push_back({{"name", chk.name}, {"detail", chk.detail}});
      cell["checks"] = c.report.checks.size();
      cell["failed"] = std::move(failed);
      cell["notes"] = c.notes;
      j.push_back(std::move(cell));
    }
    out << j.dump(2) << '\n';
  } else {
    out << std::left << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(8) << "checks"
        << std::setw(8) << "failed" << "status\n";
    for (const auto& c : cells) {
      std::size_t failed = 0;
      for (const auto& chk : c.report.checks) failed += chk.pass ? 0 : 1;
      out << std::setw(4) << c.m << std::setw(4) << c.n << std::setw(8) << c.report.checks.size()
          << std::setw(8) << failed << (failed == 0 ? "pass" : "FAIL");
      for (const auto& note : c.notes) out << "  (" << note << ")";
      out << '\n';
      for (const auto& chk : c.report.checks)
        if (!chk.pass) out << "      " << chk.name << ": " << chk.detail << '\n';
    }
    out << (all ? "all cells passed\n" : "some cells FAILED\n");
  }
  return all ? kSuccess : kCheckFailure;
}

// ---------------------------------------------------------------------------
// export

int cmd_export(const Options& o, std::ostream& out) {
  const RunConfig config = make_config(o, Format::Dot, false);
  if (config.format == Format::Text) throw InvalidArgument("export supports dot, csv, json");
  const std::int64_t m = config.m_range.lo;
  const std::int64_t n = config.n_range.lo;

  std::string rendered;
  auto render = [&](const SupportGraph& g, const std::string& name) {
    switch (config.format) {
      case Format::Dot: return graph_dot(g, name);
      case Format::Csv: return adjacency_csv(g);
      default: return graph_json(g, 2) + "\n";
    }
  };
  if (o.what == "graph") {
    rendered = render(build_graph(m, n, config.limits),
                      "zdg_" + std::to_string(m) + "_" + std::to_string(n));
  } else if (o.what == "subgraph") {
    rendered = render(build_bipartite(m, n, config.limits),
                      "zdg_bipartite_" + std::to_string(m) + "_" + std::to_string(n));
  } else {
    throw InvalidArgument("--what must be graph or subgraph");
  }

  if (o.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open " + o.output);
    file << rendered;
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral toolkit for zero-divisor graphs of F_m^n", "zdg"};
  app.require_subcommand(1);
  Options o;

  auto* quotient = app.add_subcommand("quotient", "Quotient matrix, walk matrices, rank, determinant");
  quotient->add_option("--kind", o.kind, "p or q")->required();
  quotient->add_option("--m", o.m, "Field size m >= 2")->required();
  quotient->add_option("--n", o.n, "Number of factors n >= 2")->required();
  quotient->add_option("--format", o.format, "text | csv | json");
  add_common(quotient, o);

  auto* report = app.add_subcommand("report", "Full spectral report for one (m, n)");
  report->add_option("--m", o.m, "Field size m >= 2")->required();
  report->add_option("--n", o.n, "Number of factors n >= 2")->required();
  report->add_option("--format", o.format, "json | text");
  add_common(report, o);

  auto* verify = app.add_subcommand("verify", "Invariant sweep over m and n ranges");
  verify->add_option("--m", o.m, "Range a..b (default 2..4)");
  verify->add_option("--n", o.n, "Range a..b (default 2..6)");
  verify->add_option("--format", o.format, "text | json");
  add_common(verify, o);

  auto* exp = app.add_subcommand("export", "Export a graph as DOT, CSV adjacency or JSON");
  exp->add_option("--m", o.m, "Field size m >= 2")->required();
  exp->add_option("--n", o.n, "Number of factors n >= 2")->required();
  exp->add_option("--what", o.what, "graph | subgraph");
  exp->add_option("--format", o.format, "dot | csv | json");
  exp->add_option("--output,-o", o.output, "Write to file instead of stdout");
  add_common(exp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (quotient->parsed()) return cmd_quotient(o, out);
    if (report->parsed()) return cmd_report(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_export(o, out);
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailure;
  }
}

}  // namespace zdg::cli
