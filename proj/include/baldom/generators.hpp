#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "baldom/graph.hpp"

namespace baldom {

// ---------------------------------------------------------------------------
// Convex polytope families. Vertex indexing is layer-major: layer 0 first,
// then layer 1, ... with n vertices per layer; cyclic indices wrap mod n.
// This layout is part of the external contract (kernel pivots and layer
// certificates refer to it).
// ---------------------------------------------------------------------------

// Antiprism A_n, n >= 5. Layers a, b, c. Edge templates, indices mod n:
//   a_i a_{i+1}, b_i b_{i+1}, c_i c_{i+1}, a_i b_i, b_i c_i,
//   a_{i+1} b_i, b_{i+1} c_i
inline Graph antiprism(std::size_t n) {
  if (n < 5) throw std::invalid_argument("antiprism: n must be >= 5");
  auto a = [n](std::size_t i) { return i % n; };
  auto b = [n](std::size_t i) { return n + i % n; };
  auto c = [n](std::size_t i) { return 2 * n + i % n; };
  std::vector<Edge> edges;
  edges.reserve(7 * n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(a(i), a(i + 1));
    edges.emplace_back(b(i), b(i + 1));
    edges.emplace_back(c(i), c(i + 1));
    edges.emplace_back(a(i), b(i));
    edges.emplace_back(b(i), c(i));
    edges.emplace_back(a(i + 1), b(i));
    edges.emplace_back(b(i + 1), c(i));
  }
  return Graph(3 * n, std::move(edges),
               FamilyTag{"antiprism", {{"n", {static_cast<long long>(n)}}}});
}

// Convex polytope D_n, n >= 5. Layers a, b, c, d. Edge templates mod n:
//   a_i a_{i+1}, d_i d_{i+1}, a_i b_i, b_i c_i, b_{i+1} c_i, c_i d_i
inline Graph polytope_d(std::size_t n) {
  if (n < 5) throw std::invalid_argument("polytope_d: n must be >= 5");
  auto layer = [n](std::size_t k, std::size_t i) { return k * n + i % n; };
  std::vector<Edge> edges;
  edges.reserve(6 * n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(layer(0, i), layer(0, i + 1));
    edges.emplace_back(layer(3, i), layer(3, i + 1));
    edges.emplace_back(layer(0, i), layer(1, i));
    edges.emplace_back(layer(1, i), layer(2, i));
    edges.emplace_back(layer(1, i + 1), layer(2, i));
    edges.emplace_back(layer(2, i), layer(3, i));
  }
  return Graph(4 * n, std::move(edges),
               FamilyTag{"polytope_d", {{"n", {static_cast<long long>(n)}}}});
}

// Convex polytope R_n'', n >= 5. Layers a, b, c, d, e, f. Edge templates mod n:
//   a_i a_{i+1}, f_i f_{i+1}, a_i b_i, b_i c_i, c_i d_i, d_i e_i, e_i f_i,
//   b_{i+1} c_i, d_i e_{i+1}
inline Graph polytope_r2(std::size_t n) {
  if (n < 5) throw std::invalid_argument("polytope_r2: n must be >= 5");
  auto layer = [n](std::size_t k, std::size_t i) { return k * n + i % n; };
  std::vector<Edge> edges;
  edges.reserve(9 * n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(layer(0, i), layer(0, i + 1));
    edges.emplace_back(layer(5, i), layer(5, i + 1));
    edges.emplace_back(layer(0, i), layer(1, i));
    edges.emplace_back(layer(1, i), layer(2, i));
    edges.emplace_back(layer(2, i), layer(3, i));
    edges.emplace_back(layer(3, i), layer(4, i));
    edges.emplace_back(layer(4, i), layer(5, i));
    edges.emplace_back(layer(1, i + 1), layer(2, i));
    edges.emplace_back(layer(3, i), layer(4, i + 1));
  }
  return Graph(6 * n, std::move(edges),
               FamilyTag{"polytope_r2", {{"n", {static_cast<long long>(n)}}}});
}

// m x n rectangular lattice, row-major indexing: v_{i,j} -> i*n + j
// (0-based). Horizontal and vertical edges only.
inline Graph grid(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid: m and n must be >= 1");
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  std::vector<Edge> edges;
  edges.reserve(m * (n - 1) + n * (m - 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j + 1 < n) edges.emplace_back(idx(i, j), idx(i, j + 1));
      if (i + 1 < m) edges.emplace_back(idx(i, j), idx(i + 1, j));
    }
  }
  return Graph(m * n, std::move(edges),
               FamilyTag{"grid",
                         {{"m", {static_cast<long long>(m)}},
                          {"n", {static_cast<long long>(n)}}}});
}

// ---------------------------------------------------------------------------
// Trees.
// ---------------------------------------------------------------------------

// Caterpillar: spine path a_1..a_n plus l_i leaves on spine vertex a_i.
// Indexing: spine first (0..n-1), then leaves grouped by spine vertex.
struct CaterpillarSpec {
  std::size_t spine_len = 0;
  std::vector<std::size_t> leaf_counts;

  std::size_t vertex_count() const {
    return spine_len + std::accumulate(leaf_counts.begin(), leaf_counts.end(),
                                       std::size_t{0});
  }
};

inline Graph caterpillar(const CaterpillarSpec& spec) {
  if (spec.spine_len < 1)
    throw std::invalid_argument("caterpillar: spine length must be >= 1");
  if (spec.leaf_counts.size() != spec.spine_len)
    throw std::invalid_argument("caterpillar: leaf_counts size mismatch");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < spec.spine_len; ++i) edges.emplace_back(i, i + 1);
  std::size_t next = spec.spine_len;
  std::vector<long long> leaves_param;
  for (std::size_t i = 0; i < spec.spine_len; ++i) {
    leaves_param.push_back(static_cast<long long>(spec.leaf_counts[i]));
    for (std::size_t k = 0; k < spec.leaf_counts[i]; ++k) edges.emplace_back(i, next++);
  }
  return Graph(next, std::move(edges),
               FamilyTag{"caterpillar", {{"leaves", std::move(leaves_param)}}});
}

// Rooted tree with two levels of descendants: root a_0 (index 0), children
// a_1..a_n (indices 1..n), then l_i grandchildren per child, grouped by
// parent. The characterization theorem requires at least two children.
struct TwoLevelTreeSpec {
  std::size_t n_children = 0;
  std::vector<std::size_t> child_leaf_counts;

  std::size_t vertex_count() const {
    return 1 + n_children +
           std::accumulate(child_leaf_counts.begin(), child_leaf_counts.end(),
                           std::size_t{0});
  }
};

inline Graph two_level_tree(const TwoLevelTreeSpec& spec) {
  if (spec.n_children < 2)
    throw std::invalid_argument("two_level_tree: need at least two children");
  if (spec.child_leaf_counts.size() != spec.n_children)
    throw std::invalid_argument("two_level_tree: child_leaf_counts size mismatch");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spec.n_children; ++i) edges.emplace_back(0, 1 + i);
  std::size_t next = 1 + spec.n_children;
  std::vector<long long> leaves_param;
  for (std::size_t i = 0; i < spec.n_children; ++i) {
    leaves_param.push_back(static_cast<long long>(spec.child_leaf_counts[i]));
    for (std::size_t k = 0; k < spec.child_leaf_counts[i]; ++k)
      edges.emplace_back(1 + i, next++);
  }
  return Graph(next, std::move(edges),
               FamilyTag{"two_level", {{"leaves", std::move(leaves_param)}}});
}

// Shape descriptor for a full binary tree: a leaf, or a node with exactly two
// sub-shapes. Multiple shapes can share a vertex count, so generation takes
// the shape rather than a count.
struct FullBinaryShape {
  std::vector<FullBinaryShape> children;  // empty (leaf) or exactly two

  bool is_leaf() const { return children.empty(); }

  std::size_t vertex_count() const {
    std::size_t total = 1;
    for (const auto& c : children) total += c.vertex_count();
    return total;
  }
};

inline FullBinaryShape fb_leaf() { return {}; }

inline FullBinaryShape fb_node(FullBinaryShape left, FullBinaryShape right) {
  FullBinaryShape s;
  s.children.push_back(std::move(left));
  s.children.push_back(std::move(right));
  return s;
}

// Grammar: "." is a leaf, "(LR)" is an internal node with sub-shapes L and R.
inline FullBinaryShape parse_full_binary_shape(std::string_view text) {
  std::size_t pos = 0;
  auto parse = [&](auto&& self) -> FullBinaryShape {
    if (pos >= text.size())
      throw std::invalid_argument("full binary shape: unexpected end");
    char c = text[pos++];
    if (c == '.') return fb_leaf();
    if (c != '(')
      throw std::invalid_argument("full binary shape: expected '.' or '('");
    FullBinaryShape left = self(self);
    FullBinaryShape right = self(self);
    if (pos >= text.size() || text[pos] != ')')
      throw std::invalid_argument("full binary shape: expected ')'");
    ++pos;
    return fb_node(std::move(left), std::move(right));
  };
  FullBinaryShape s = parse(parse);
  if (pos != text.size())
    throw std::invalid_argument("full binary shape: trailing characters");
  return s;
}

inline std::string shape_to_string(const FullBinaryShape& s) {
  if (s.is_leaf()) return ".";
  return "(" + shape_to_string(s.children[0]) + shape_to_string(s.children[1]) + ")";
}

// Root gets index 0; remaining vertices are numbered in BFS (level) order.
inline Graph full_binary_tree(const FullBinaryShape& shape) {
  if (!shape.is_leaf() && shape.children.size() != 2)
    throw std::invalid_argument("full_binary_tree: malformed shape");
  std::vector<Edge> edges;
  std::vector<long long> preorder;
  // preorder bits (1 = internal, 0 = leaf) give a canonical family parameter
  {
    std::vector<const FullBinaryShape*> stack{&shape};
    while (!stack.empty()) {
      const FullBinaryShape* s = stack.back();
      stack.pop_back();
      if (!s->is_leaf() && s->children.size() != 2)
        throw std::invalid_argument("full_binary_tree: malformed shape");
      preorder.push_back(s->is_leaf() ? 0 : 1);
      for (auto it = s->children.rbegin(); it != s->children.rend(); ++it)
        stack.push_back(&*it);
    }
  }
  std::vector<const FullBinaryShape*> queue{&shape};
  std::size_t next = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const FullBinaryShape* s = queue[head];
    for (const auto& child : s->children) {
      edges.emplace_back(head, next++);
      queue.push_back(&child);
    }
  }
  return Graph(queue.size(), std::move(edges),
               FamilyTag{"full_binary", {{"preorder", std::move(preorder)}}});
}

// All shape descriptors with at most max_vertices vertices, ordered by vertex
// count and recursively by left subtree size. Used for test sweeps.
inline std::vector<FullBinaryShape> enumerate_full_binary_shapes(
    std::size_t max_vertices) {
  std::vector<std::vector<FullBinaryShape>> by_count(max_vertices + 1);
  if (max_vertices >= 1) by_count[1] = {fb_leaf()};
  for (std::size_t v = 3; v <= max_vertices; v += 2) {
    for (std::size_t lv = 1; lv + 2 <= v; lv += 2) {
      std::size_t rv = v - 1 - lv;
      for (const auto& left : by_count[lv])
        for (const auto& right : by_count[rv])
          by_count[v].push_back(fb_node(left, right));
    }
  }
  std::vector<FullBinaryShape> all;
  for (std::size_t v = 1; v <= max_vertices; ++v)
    for (auto& s : by_count[v]) all.push_back(std::move(s));
  return all;
}

}  // namespace baldom
