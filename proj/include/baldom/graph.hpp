#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace baldom {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Optional tag recording which named family a graph was generated from,
// e.g. {"antiprism", {{"n", {7}}}}. Parameter values are scalars or lists.
struct FamilyTag {
  std::string name;
  std::map<std::string, std::vector<long long>> params;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Simple undirected graph with dense vertex indices 0..n-1. Immutable after
// construction; adjacency lists are kept sorted so that generated families
// have a reproducible layout.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n_vertices, std::vector<Edge> edge_list,
        std::optional<FamilyTag> family = std::nullopt)
      : n_(n_vertices), family_(std::move(family)) {
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
      if (u >= n_ || v >= n_)
        throw std::invalid_argument("Graph: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("Graph: self-loop");
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("Graph: duplicate edge");
    adjacency_.assign(n_, {});
    for (auto [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  // Normalized (u < v), sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::optional<FamilyTag>& family() const { return family_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.family_ == b.family_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= n_) throw std::invalid_argument("Graph: vertex index out of range");
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::optional<FamilyTag> family_;
};

// N[v] = {v} union neighbors, sorted.
inline std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  const auto& nbrs = g.neighbors(v);
  std::vector<Vertex> result;
  result.reserve(nbrs.size() + 1);
  result.insert(result.end(), nbrs.begin(), nbrs.end());
  result.insert(std::lower_bound(result.begin(), result.end(), v), v);
  return result;
}

// M(G) = A(G) + I as sparse 0/1 row supports: row i lists the columns of its
// unit entries, which is exactly N[i].
struct OperatorMatrix {
  std::size_t dim = 0;
  std::vector<std::vector<Vertex>> rows;
};

inline OperatorMatrix operator_matrix(const Graph& g) {
  OperatorMatrix m;
  m.dim = g.vertex_count();
  m.rows.reserve(m.dim);
  for (Vertex v = 0; v < m.dim; ++v) m.rows.push_back(closed_neighborhood(g, v));
  return m;
}

// Vertex labeling over {-1, 0, 1} with its weight (entry sum) cached.
class Labeling {
 public:
  Labeling() = default;

  explicit Labeling(const std::vector<int>& values) {
    values_.reserve(values.size());
    for (int v : values) {
      if (v < -1 || v > 1)
        throw std::invalid_argument("Labeling: entry outside {-1,0,1}");
      values_.push_back(static_cast<std::int8_t>(v));
      weight_ += v;
    }
  }

  static Labeling zeros(std::size_t n) {
    Labeling lab;
    lab.values_.assign(n, 0);
    return lab;
  }

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_.at(i); }
  long long weight() const { return weight_; }

  Labeling negated() const {
    Labeling out;
    out.values_.reserve(values_.size());
    for (auto v : values_) out.values_.push_back(static_cast<std::int8_t>(-v));
    out.weight_ = -weight_;
    return out;
  }

  std::vector<int> to_ints() const {
    return std::vector<int>(values_.begin(), values_.end());
  }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](std::int8_t v) { return v == 0; });
  }

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.values_ == b.values_;
  }
  // Lexicographic with -1 < 0 < 1.
  friend std::strong_ordering operator<=>(const Labeling& a, const Labeling& b) {
    return std::lexicographical_compare_three_way(
        a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end());
  }

 private:
  std::vector<std::int8_t> values_;
  long long weight_ = 0;
};

// A labeling is a balanced dominating function iff every closed neighborhood
// sums to zero; equivalently M(G) * lab = 0.
inline bool is_bdf(const Graph& g, const Labeling& lab) {
  if (lab.size() != g.vertex_count())
    throw std::invalid_argument("is_bdf: labeling length mismatch");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    long long sum = lab[v];
    for (Vertex u : g.neighbors(v)) sum += lab[u];
    if (sum != 0) return false;
  }
  return true;
}

inline std::vector<Vertex> bfs_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      Vertex v = order[head++];
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          order.push_back(u);
        }
      }
    }
  }
  return order;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.vertex_count();
}

}  // namespace baldom
