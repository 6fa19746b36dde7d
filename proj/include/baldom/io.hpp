#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "baldom/certificates.hpp"
#include "baldom/graph.hpp"
#include "baldom/grids.hpp"
#include "baldom/rational.hpp"
#include "baldom/solver.hpp"

namespace baldom {

// Insertion-ordered JSON keeps report output byte-stable.
using Json = nlohmann::ordered_json;

// Graph schema: {"n": int, "edges": [[i,j],...], "family": {...}|null}
inline Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  if (g.family()) {
    Json params = Json::object();
    for (const auto& [key, values] : g.family()->params) {
      if (values.size() == 1) params[key] = values[0];
      else params[key] = values;
    }
    j["family"] = Json{{"name", g.family()->name}, {"params", std::move(params)}};
  } else {
    j["family"] = nullptr;
  }
  return j;
}

inline Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON: expected {\"n\", \"edges\", ...}");
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph JSON: edge must be a pair");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  std::optional<FamilyTag> family;
  if (j.contains("family") && !j.at("family").is_null()) {
    const Json& f = j.at("family");
    FamilyTag tag;
    tag.name = f.at("name").get<std::string>();
    if (f.contains("params")) {
      for (const auto& [key, value] : f.at("params").items()) {
        if (value.is_array())
          tag.params[key] = value.get<std::vector<long long>>();
        else
          tag.params[key] = {value.get<long long>()};
      }
    }
    family = std::move(tag);
  }
  return Graph(n, std::move(edges), std::move(family));
}

// DOT export; vertex label is the index, with the BDF value attached as a
// "bdf" attribute when a labeling is supplied.
inline std::string graph_to_dot(const Graph& g, const Labeling* lab = nullptr) {
  if (lab && lab->size() != g.vertex_count())
    throw std::invalid_argument("graph_to_dot: labeling length mismatch");
  std::ostringstream out;
  out << "graph g {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << v << "\"";
    if (lab) out << ", bdf=\"" << (*lab)[v] << "\"";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

inline Json labeling_to_json(const Labeling& lab) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < lab.size(); ++i) arr.push_back(lab[i]);
  return arr;
}

// {"gamma", "d_balanced", "nullity", "bdf_count", "witness", "method"}
inline Json gamma_result_to_json(const GammaResult& r) {
  Json j;
  j["gamma"] = r.gamma;
  j["d_balanced"] = r.d_balanced;
  if (r.nullity) j["nullity"] = *r.nullity;
  else j["nullity"] = nullptr;
  if (r.bdf_count) j["bdf_count"] = *r.bdf_count;
  else j["bdf_count"] = nullptr;
  j["witness"] = labeling_to_json(r.witness);
  j["method"] = to_string(r.method);
  return j;
}

inline Json int_matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

// {"layers", "quotient", "det", "certified", "reason"}
inline Json certify_report_to_json(const LayerPartition& p, const CertifyReport& rep) {
  Json j;
  Json layers = Json::array();
  for (const auto& layer : p.layers) layers.push_back(layer);
  j["layers"] = std::move(layers);
  if (rep.quotient) j["quotient"] = int_matrix_to_json(*rep.quotient);
  else j["quotient"] = nullptr;
  if (rep.determinant) j["det"] = rational_to_string(*rep.determinant);
  else j["det"] = nullptr;
  j["certified"] = rep.status == CertifyStatus::certified;
  j["reason"] = to_string(rep.status);
  return j;
}

inline Json grid_labeling_to_json(const GridLabeling& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.m; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.n; ++j) row.push_back(g.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json grid_scheme_to_json(const GridScheme& s) {
  Json j;
  j["type"] = s.name();
  Json layout = Json::array();
  for (const RowBlock& b : s.row_layout) layout.push_back(to_string(b));
  j["layout"] = std::move(layout);
  return j;
}

// Plain text rendering of a grid labeling for quick inspection.
inline std::string grid_labeling_to_text(const GridLabeling& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.m; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      const int v = g.at(i, j);
      out << (j ? " " : "") << (v >= 0 ? " " : "") << v;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace baldom
