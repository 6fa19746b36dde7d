#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "baldom/graph.hpp"
#include "baldom/rational.hpp"

namespace baldom {

// Exact reduced row echelon description of ker(M(G)) over the rationals.
// Every pivot coordinate is an exact linear form in the free coordinates:
//   x_{pivot_cols[k]} = sum_j expression[k][j] * x_{free_cols[j]}
// Substituting any rational values for the free coordinates yields a vector
// annihilated by M(G); the BDFs are exactly the substitutions that land in
// {-1,0,1}^n.
struct KernelDescription {
  std::size_t n_vertices = 0;
  std::size_t dim = 0;  // nullity
  std::vector<Vertex> pivot_cols;
  std::vector<Vertex> free_cols;
  std::vector<std::vector<Rational>> expression;
};

// Gauss-Jordan elimination of M(G) with a fixed pivot rule: columns are
// processed left to right and the first remaining row with a nonzero entry
// becomes the pivot, so the output is reproducible.
inline KernelDescription kernel(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : closed_neighborhood(g, v)) m[v][u] = 1;

  KernelDescription kd;
  kd.n_vertices = n;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) {
      kd.free_cols.push_back(col);
      continue;
    }
    if (pivot != rank) std::swap(m[pivot], m[rank]);
    const Rational inv = Rational(1) / m[rank][col];
    for (std::size_t j = col; j < n; ++j) m[rank][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[rank][j];
    }
    kd.pivot_cols.push_back(col);
    ++rank;
  }
  kd.dim = kd.free_cols.size();
  kd.expression.resize(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    kd.expression[k].reserve(kd.dim);
    for (Vertex f : kd.free_cols) kd.expression[k].push_back(-m[k][f]);
  }
  return kd;
}

// Full kernel vector from an assignment of the free coordinates.
inline std::vector<Rational> kernel_substitute(
    const KernelDescription& kd, const std::vector<Rational>& free_values) {
  if (free_values.size() != kd.dim)
    throw std::invalid_argument("kernel_substitute: wrong number of free values");
  std::vector<Rational> x(kd.n_vertices, Rational(0));
  for (std::size_t j = 0; j < kd.dim; ++j) x[kd.free_cols[j]] = free_values[j];
  for (std::size_t k = 0; k < kd.pivot_cols.size(); ++k) {
    Rational v(0);
    for (std::size_t j = 0; j < kd.dim; ++j)
      if (kd.expression[k][j] != 0) v += kd.expression[k][j] * free_values[j];
    x[kd.pivot_cols[k]] = v;
  }
  return x;
}

}  // namespace baldom
