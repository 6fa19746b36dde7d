#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baldom/graph.hpp"
#include "baldom/rational.hpp"

namespace baldom {

// Ordered partition of the vertex set into disjoint non-empty layers.
struct LayerPartition {
  std::vector<std::vector<Vertex>> layers;
};

using IntMatrix = std::vector<std::vector<long long>>;

// Machine-checkable form of the layer-sum argument: an equitable layer
// partition whose quotient system is nonsingular forces every per-layer
// label sum (hence the weight) of every BDF to zero. The condition is
// sufficient, not necessary: absence of a certificate proves nothing.
struct LayerCertificate {
  LayerPartition partition;
  IntMatrix quotient;
  Rational determinant;
  bool nonsingular = false;
};

// Fraction-free (Bareiss) determinant; exact over arbitrary-precision ints.
inline Rational int_matrix_determinant(const IntMatrix& mat) {
  const std::size_t n = mat.size();
  for (const auto& row : mat)
    if (row.size() != n)
      throw std::invalid_argument("int_matrix_determinant: matrix not square");
  if (n == 0) return Rational(1);
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mat[i][j];
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rational(sign * a[n - 1][n - 1]);
}

namespace detail {

inline void validate_partition(const Graph& g, const LayerPartition& p) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& layer : p.layers) {
    if (layer.empty())
      throw std::invalid_argument("LayerPartition: empty layer");
    for (Vertex v : layer) {
      if (v >= n)
        throw std::invalid_argument("LayerPartition: vertex out of range");
      if (seen[v])
        throw std::invalid_argument("LayerPartition: overlapping layers");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n)
    throw std::invalid_argument("LayerPartition: layers do not cover all vertices");
}

}  // namespace detail

// Tests the equitability condition: for each pair (i, j), every vertex of
// layer j must have the same number of closed-neighborhood members in layer
// i. Returns the quotient matrix Q with Q[i][j] = that constant, or nullopt
// if some block has non-constant column sums.
inline std::optional<IntMatrix> check_equitable(const Graph& g,
                                                const LayerPartition& p) {
  detail::validate_partition(g, p);
  const std::size_t k = p.layers.size();
  std::vector<std::size_t> layer_of(g.vertex_count(), 0);
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex v : p.layers[i]) layer_of[v] = i;

  IntMatrix q(k, std::vector<long long>(k, 0));
  std::vector<long long> counts(k);
  for (std::size_t j = 0; j < k; ++j) {
    bool first = true;
    for (Vertex v : p.layers[j]) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex u : closed_neighborhood(g, v)) ++counts[layer_of[u]];
      if (first) {
        for (std::size_t i = 0; i < k; ++i) q[i][j] = counts[i];
        first = false;
      } else {
        for (std::size_t i = 0; i < k; ++i)
          if (q[i][j] != counts[i]) return std::nullopt;
      }
    }
  }
  return q;
}

// A certificate exists iff the partition is equitable and the quotient is
// nonsingular over the rationals. Semantic guarantee: a certificate implies
// every BDF on g has weight 0, hence gamma_bd(g) = 0. Absence means the
// technique is inconclusive, not that g fails to be d-balanced.
inline std::optional<LayerCertificate> certify_d_balanced(const Graph& g,
                                                          const LayerPartition& p) {
  auto q = check_equitable(g, p);
  if (!q) return std::nullopt;
  Rational det = int_matrix_determinant(*q);
  if (det == 0) return std::nullopt;
  LayerCertificate cert;
  cert.partition = p;
  cert.quotient = std::move(*q);
  cert.determinant = std::move(det);
  cert.nonsingular = true;
  return cert;
}

enum class CertifyStatus { certified, not_equitable, singular_quotient };

inline std::string to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::certified: return "certified d-balanced";
    case CertifyStatus::not_equitable: return "inconclusive (not equitable)";
    case CertifyStatus::singular_quotient: return "inconclusive (singular quotient)";
  }
  return "unknown";
}

// Three-valued outcome for reporting; the quotient and determinant are kept
// when they exist so inconclusive runs can still be inspected.
struct CertifyReport {
  CertifyStatus status = CertifyStatus::not_equitable;
  std::optional<IntMatrix> quotient;
  std::optional<Rational> determinant;
};

inline CertifyReport certify_report(const Graph& g, const LayerPartition& p) {
  CertifyReport rep;
  auto q = check_equitable(g, p);
  if (!q) {
    rep.status = CertifyStatus::not_equitable;
    return rep;
  }
  rep.determinant = int_matrix_determinant(*q);
  rep.quotient = std::move(*q);
  rep.status = (*rep.determinant == 0) ? CertifyStatus::singular_quotient
                                       : CertifyStatus::certified;
  return rep;
}

// The layer-major decomposition used by the polytope proofs: 3, 4 or 6
// layers of n consecutive vertices. Only available for graphs carrying the
// corresponding family tag.
inline std::optional<LayerPartition> natural_partition(const Graph& g) {
  if (!g.family()) return std::nullopt;
  const FamilyTag& tag = *g.family();
  std::size_t layer_count = 0;
  if (tag.name == "antiprism") layer_count = 3;
  else if (tag.name == "polytope_d") layer_count = 4;
  else if (tag.name == "polytope_r2") layer_count = 6;
  else return std::nullopt;
  auto it = tag.params.find("n");
  if (it == tag.params.end() || it->second.size() != 1) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(it->second[0]);
  if (layer_count * n != g.vertex_count()) return std::nullopt;
  LayerPartition p;
  p.layers.resize(layer_count);
  for (std::size_t k = 0; k < layer_count; ++k) {
    p.layers[k].reserve(n);
    for (std::size_t i = 0; i < n; ++i) p.layers[k].push_back(k * n + i);
  }
  return p;
}

}  // namespace baldom
