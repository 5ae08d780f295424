#include "zdg/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace zdg {

using Json = nlohmann::ordered_json;

namespace {

template <typename T>
std::string csv_impl(const Matrix<T>& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << '\n';
  }
  return os.str();
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

std::string matrix_csv(const Matrix<BigInt>& m) { return csv_impl(m); }
std::string matrix_csv(const Matrix<std::int64_t>& m) { return csv_impl(m); }

std::string matrix_json(const Matrix<BigInt>& m, int indent) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(x.str());
    rows.push_back(std::move(row));
  }
  return rows.dump(indent);
}

std::string matrix_text(const Matrix<BigInt>& m) {
  std::size_t width = 1;
  for (const auto& x : m.data()) width = std::max(width, x.str().size());
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = m(r, c).str();
      os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << "]\n";
  }
  return os.str();
}

std::string graph_dot(const SupportGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t c = 0; c < g.cells().size(); ++c) {
    os << "  subgraph cell_" << c + 1 << " {\n    rank=same;\n";
    for (std::size_t v : g.cells()[c]) os << "    \"" << g.vertices()[v].label(g.m()) << "\";\n";
    os << "  }\n";
  }
  for (const auto& [u, v] : g.edges())
    os << "  \"" << g.vertices()[u].label(g.m()) << "\" -- \"" << g.vertices()[v].label(g.m())
       << "\";\n";
  os << "}\n";
  return os.str();
}

std::string adjacency_csv(const SupportGraph& g) { return matrix_csv(adjacency_matrix(g)); }

std::string graph_json(const SupportGraph& g, int indent) {
  Json out;
  out["m"] = g.m();
  out["n"] = g.n();
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v.label(g.m()));
  out["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  return out.dump(indent);
}

std::string report_json(const std::vector<ReportDocument>& docs, int indent) {
  Json out = Json::array();
  for (const auto& doc : docs) {
    Json d;
    d["m"] = doc.source.m;
    d["n"] = doc.source.n;
    d["graph"] = std::string(to_string(doc.source.graph));
    Json eigenvalues = Json::array();
    if (doc.spectrum) {
      for (const auto& e : doc.spectrum->entries) {
        Json item;
        item["value"] = e.value;
        item["multiplicity"] = e.multiplicity;
        item["main"] = e.is_main;
        eigenvalues.push_back(std::move(item));
      }
    }
    d["eigenvalues"] = std::move(eigenvalues);
    if (doc.spectrum) {
      d["tolerances"] = {{"grouping_gap", doc.spectrum->grouping_gap},
                         {"projection_threshold", doc.spectrum->projection_threshold}};
    }
    if (!doc.spectrum_note.empty()) d["spectrum_note"] = doc.spectrum_note;

    Json predicted;
    predicted["main_eigenvalues"] = doc.predicted_main;
    if (doc.predicted) {
      predicted["p_eigenvalues"] = doc.predicted->p_eigenvalues;
      Json q = Json::array();
      for (const auto& e : doc.predicted->q_derived) {
        Json item;
        item["i"] = e.index;
        item["exact"] = e.exact.to_string();
        item["value"] = e.value;
        item["multiplicity"] = e.multiplicity;
        q.push_back(std::move(item));
      }
      predicted["q_derived"] = std::move(q);
      predicted["zero_multiplicity"] = doc.predicted->zero_multiplicity;
      predicted["zero_multiplicity_source"] = "derived";
    }
    d["predicted"] = std::move(predicted);

    Json checks = Json::array();
    for (const auto& c : doc.checks.checks) {
      Json item;
      item["name"] = c.name;
      item["pass"] = c.pass;
      item["residual"] = number_or_null(c.residual);
      if (!c.detail.empty()) item["detail"] = c.detail;
      checks.push_back(std::move(item));
    }
    d["checks"] = std::move(checks);
    out.push_back(std::move(d));
  }
  return out.dump(indent);
}

}  // namespace zdg
