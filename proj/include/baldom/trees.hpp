#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "baldom/generators.hpp"
#include "baldom/graph.hpp"
#include "baldom/solver.hpp"

namespace baldom {

// Closed-form verdict for rooted trees with two levels of descendants and at
// least two children of the root: the tree fails to be d-balanced exactly
// when l = (n-1)/2 children have two leaves and every child has 0 or 2
// leaves; in that case the maximum BDF weight is n-1.
struct TwoLevelVerdict {
  bool d_balanced = true;
  std::size_t l_count = 0;       // children with exactly two leaves
  long long gamma_formula = 0;   // 0 when d-balanced, n-1 otherwise
};

inline TwoLevelVerdict two_level_verdict(const TwoLevelTreeSpec& spec) {
  if (spec.n_children < 2)
    throw std::invalid_argument("two_level_verdict: need at least two children");
  if (spec.child_leaf_counts.size() != spec.n_children)
    throw std::invalid_argument("two_level_verdict: child_leaf_counts size mismatch");
  TwoLevelVerdict v;
  bool all_02 = true;
  for (std::size_t l : spec.child_leaf_counts) {
    if (l == 2) ++v.l_count;
    if (l != 0 && l != 2) all_02 = false;
  }
  const bool unbalanced = all_02 && 2 * v.l_count == spec.n_children - 1;
  v.d_balanced = !unbalanced;
  v.gamma_formula = unbalanced ? static_cast<long long>(spec.n_children - 1) : 0;
  return v;
}

// Property assertion: any BDF on a full binary tree labels the root zero.
// The generator places the root at index 0.
inline bool full_binary_root_zero(const Graph& g, const Labeling& lab) {
  if (!is_bdf(g, lab))
    throw std::invalid_argument("full_binary_root_zero: labeling is not a BDF");
  return lab[0] == 0;
}

// D-balancedness of a full binary tree, decided by exhaustive solve. The
// expected outcome is always true with the zero labeling as the only BDF.
inline bool full_binary_d_balanced(const FullBinaryShape& shape,
                                   const SearchLimits& limits = {}) {
  const GammaResult r = gamma_bd(full_binary_tree(shape), limits);
  return r.gamma == 0 && r.bdf_count && *r.bdf_count == 1;
}

// One non-zero MBDF on a caterpillar, described by its spine labels. The
// leaf counts are forced by the labels:
//   l_1 = 1 + x_1 x_2,  l_n = 1 + x_{n-1} x_n,
//   l_i = 1 + x_{i-1} x_i + x_i x_{i+1}  otherwise,
// and each leaf carries -x_i. Consecutive spine pairs are classified as
// same-sign (p), opposite-sign (q) or containing a zero (r).
struct CaterpillarAnalysis {
  std::vector<int> spine_labels;
  std::vector<std::size_t> leaf_counts;
  std::size_t pairs_same_sign = 0;  // p
  std::size_t pairs_opposite = 0;   // q
  std::size_t pairs_with_zero = 0;  // r
  long long pair_sum = 0;           // S = sum of x_i * x_{i+1}
  long long weight = 0;             // weight of the induced full labeling
  std::size_t total_leaves = 0;     // L

  CaterpillarSpec spec() const {
    return CaterpillarSpec{spine_labels.size(), leaf_counts};
  }
};

// Enumerates the spine label vectors of all non-zero MBDFs on caterpillars
// with the given spine length, in lexicographic order (-1 < 0 < 1). A valid
// vector has non-zero endpoints, no two consecutive zeros, cancelling spine
// neighbors around each zero (a zero vertex's leaves are labeled zero, so
// its balance condition reduces to x_{i-1} + x_{i+1} = 0), and non-negative
// derived leaf counts.
inline std::vector<CaterpillarAnalysis> caterpillar_mbdf_search(std::size_t spine_len) {
  if (spine_len < 2)
    throw std::invalid_argument("caterpillar_mbdf_search: spine length must be >= 2");
  const std::size_t n = spine_len;
  std::vector<CaterpillarAnalysis> results;
  std::vector<int> x(n, -1);
  while (true) {
    bool ok = x[0] != 0 && x[n - 1] != 0;
    for (std::size_t i = 0; ok && i + 1 < n; ++i)
      if (x[i] == 0 && x[i + 1] == 0) ok = false;
    for (std::size_t i = 1; ok && i + 1 < n; ++i)
      if (x[i] == 0 && x[i - 1] + x[i + 1] != 0) ok = false;
    if (ok) {
      CaterpillarAnalysis a;
      a.spine_labels = x;
      a.leaf_counts.resize(n);
      for (std::size_t i = 0; ok && i < n; ++i) {
        long long l = 1;
        if (i > 0) l += x[i - 1] * x[i];
        if (i + 1 < n) l += x[i] * x[i + 1];
        if (l < 0) {
          ok = false;
          break;
        }
        a.leaf_counts[i] = static_cast<std::size_t>(l);
      }
      if (ok) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
          const int prod = x[i] * x[i + 1];
          a.pair_sum += prod;
          if (x[i] == 0 || x[i + 1] == 0) ++a.pairs_with_zero;
          else if (prod > 0) ++a.pairs_same_sign;
          else ++a.pairs_opposite;
        }
        for (std::size_t i = 0; i < n; ++i) {
          a.total_leaves += a.leaf_counts[i];
          a.weight += x[i] * (1 - static_cast<long long>(a.leaf_counts[i]));
        }
        results.push_back(std::move(a));
      }
    }
    // next vector in lexicographic order
    std::size_t i = n;
    while (i > 0 && x[i - 1] == 1) x[--i] = -1;
    if (i == 0) break;
    ++x[i - 1];
  }
  return results;
}

// The caterpillar and full labeling induced by a search result: spine labels
// as given, every leaf labeled with the negation of its spine vertex.
inline std::pair<Graph, Labeling> induced_caterpillar(const CaterpillarAnalysis& a) {
  Graph g = caterpillar(a.spec());
  std::vector<int> values(a.spine_labels.begin(), a.spine_labels.end());
  values.reserve(g.vertex_count());
  for (std::size_t i = 0; i < a.spine_labels.size(); ++i)
    for (std::size_t k = 0; k < a.leaf_counts[i]; ++k)
      values.push_back(-a.spine_labels[i]);
  return {std::move(g), Labeling(values)};
}

// Exact gamma for a caterpillar; thin wrapper over the kernel solver.
inline GammaResult caterpillar_gamma(const CaterpillarSpec& spec,
                                     const SearchLimits& limits = {}) {
  return gamma_bd(caterpillar(spec), limits);
}

}  // namespace baldom
