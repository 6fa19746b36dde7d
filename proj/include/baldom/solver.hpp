#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "baldom/errors.hpp"
#include "baldom/graph.hpp"
#include "baldom/kernel.hpp"
#include "baldom/rational.hpp"

namespace baldom {

struct SearchLimits {
  // gamma_bd enumerates {-1,0,1}^dim over the kernel's free coordinates;
  // dim beyond this bound raises resource_error instead of blowing up.
  // The same bound gates the grid first-column enumeration (also 3^k).
  std::size_t max_free_enumeration = 20;
  std::uint64_t node_budget = 50'000'000;
  unsigned workers = 1;
};

enum class SolveMethod { kernel_trivial, kernel_enumeration, backtracking, propagation };

inline std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::kernel_trivial: return "kernel-trivial";
    case SolveMethod::kernel_enumeration: return "kernel-enumeration";
    case SolveMethod::backtracking: return "backtracking";
    case SolveMethod::propagation: return "propagation";
  }
  return "unknown";
}

struct GammaResult {
  long long gamma = 0;
  Labeling witness;
  bool d_balanced = true;
  SolveMethod method = SolveMethod::kernel_trivial;
  std::optional<std::uint64_t> bdf_count;
  std::optional<std::size_t> nullity;
};

namespace detail {

inline std::uint64_t pow3(std::size_t k) {
  std::uint64_t p = 1;
  while (k--) p *= 3;
  return p;
}

// Evaluation plan for enumerating {-1,0,1}^dim free assignments. Each pivot
// coordinate keeps a running rational sum; a pivot is checked as soon as the
// last free variable in its support is assigned, pruning the subtree early.
struct KernelEnumPlan {
  const KernelDescription* kd;
  std::size_t n;
  // terms_at[d]: (pivot row, coefficient) pairs involving free variable d
  std::vector<std::vector<std::pair<std::size_t, Rational>>> terms_at;
  // complete_at[d]: pivot rows fully determined once free variable d is set
  std::vector<std::vector<std::size_t>> complete_at;

  explicit KernelEnumPlan(const KernelDescription& k)
      : kd(&k), n(k.n_vertices), terms_at(k.dim), complete_at(k.dim) {
    for (std::size_t row = 0; row < k.pivot_cols.size(); ++row) {
      std::size_t last = std::numeric_limits<std::size_t>::max();
      for (std::size_t j = 0; j < k.dim; ++j) {
        if (k.expression[row][j] != 0) {
          terms_at[j].emplace_back(row, k.expression[row][j]);
          last = j;
        }
      }
      // rows with empty support are identically zero and never fail
      if (last != std::numeric_limits<std::size_t>::max())
        complete_at[last].push_back(row);
    }
  }
};

// DFS over one chunk of the assignment space: the first `prefix_len` free
// variables are pinned to the digits of `chunk`. Solutions are reported in
// lexicographic order of the free assignment (-1 < 0 < 1).
template <typename Emit>
void enumerate_chunk(const KernelEnumPlan& plan, std::uint64_t chunk,
                     std::size_t prefix_len, Emit&& emit) {
  const KernelDescription& kd = *plan.kd;
  const std::size_t dim = kd.dim;
  std::vector<int> free_vals(dim, 0);
  std::vector<int> pivot_vals(kd.pivot_cols.size(), 0);
  std::vector<Rational> sums(kd.pivot_cols.size(), Rational(0));

  std::vector<int> prefix(prefix_len);
  for (std::size_t d = prefix_len; d-- > 0;) {
    prefix[d] = static_cast<int>(chunk % 3) - 1;
    chunk /= 3;
  }

  auto apply = [&](std::size_t d, int v) {
    if (v != 0)
      for (const auto& [row, coeff] : plan.terms_at[d]) sums[row] += coeff * v;
  };
  auto undo = [&](std::size_t d, int v) {
    if (v != 0)
      for (const auto& [row, coeff] : plan.terms_at[d]) sums[row] -= coeff * v;
  };
  auto completed_ok = [&](std::size_t d) {
    for (std::size_t row : plan.complete_at[d]) {
      const Rational& s = sums[row];
      if (denominator(s) != 1) return false;
      const BigInt& num = numerator(s);
      if (num < -1 || num > 1) return false;
      pivot_vals[row] = static_cast<int>(num);
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t d) -> void {
    if (d == dim) {
      std::vector<int> values(plan.n, 0);
      for (std::size_t j = 0; j < dim; ++j) values[kd.free_cols[j]] = free_vals[j];
      for (std::size_t k = 0; k < kd.pivot_cols.size(); ++k)
        values[kd.pivot_cols[k]] = pivot_vals[k];
      emit(values);
      return;
    }
    if (d < prefix_len) {
      const int v = prefix[d];
      free_vals[d] = v;
      apply(d, v);
      if (completed_ok(d)) self(self, d + 1);
      undo(d, v);
      return;
    }
    for (int v = -1; v <= 1; ++v) {
      free_vals[d] = v;
      apply(d, v);
      if (completed_ok(d)) self(self, d + 1);
      undo(d, v);
    }
  };
  dfs(dfs, 0);
}

// Runs fn(chunk_index) for every chunk, round-robin across workers. Chunks
// are independent, so per-chunk outputs merged in chunk order do not depend
// on the worker count.
inline void run_chunks(std::uint64_t chunk_count, unsigned workers,
                       const std::function<void(std::uint64_t)>& fn) {
  if (workers <= 1 || chunk_count <= 1) {
    for (std::uint64_t c = 0; c < chunk_count; ++c) fn(c);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t c = w; c < chunk_count; c += workers) fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

inline std::size_t chunk_prefix_len(std::size_t dim, unsigned workers) {
  if (workers <= 1) return 0;
  std::size_t k = 0;
  while (k < dim && k < 6 && pow3(k) < 4ull * workers) ++k;
  return k;
}

}  // namespace detail

// Complete, deterministic list of all BDFs of g, ordered lexicographically by
// the free-coordinate assignment. Includes the zero labeling and is closed
// under negation. The enumeration is exhaustive because the free coordinates
// are vertex coordinates: every BDF restricts to a {-1,0,1} free assignment.
inline std::vector<Labeling> enumerate_bdfs(const Graph& g,
                                            const SearchLimits& limits = {}) {
  const KernelDescription kd = kernel(g);
  if (kd.dim > limits.max_free_enumeration)
    throw resource_error("enumerate_bdfs: kernel nullity " + std::to_string(kd.dim) +
                             " exceeds max_free_enumeration " +
                             std::to_string(limits.max_free_enumeration),
                         kd.dim);
  if (kd.dim == 0) return {Labeling::zeros(g.vertex_count())};

  const detail::KernelEnumPlan plan(kd);
  const std::size_t prefix = detail::chunk_prefix_len(kd.dim, limits.workers);
  const std::uint64_t chunks = detail::pow3(prefix);
  std::vector<std::vector<Labeling>> per_chunk(chunks);
  detail::run_chunks(chunks, limits.workers, [&](std::uint64_t c) {
    detail::enumerate_chunk(plan, c, prefix, [&](const std::vector<int>& values) {
      per_chunk[c].emplace_back(values);
    });
  });
  std::vector<Labeling> out;
  for (auto& bucket : per_chunk)
    for (auto& lab : bucket) out.push_back(std::move(lab));
  return out;
}

// Exact balanced domination number via the kernel of M(G). Nullity zero is
// the kernel-trivial shortcut (the zero labeling is the only BDF); otherwise
// all free assignments are enumerated and the maximum weight is taken, with
// ties broken toward the lexicographically smallest witness.
inline GammaResult gamma_bd(const Graph& g, const SearchLimits& limits = {}) {
  const KernelDescription kd = kernel(g);
  if (kd.dim == 0) {
    GammaResult r;
    r.gamma = 0;
    r.witness = Labeling::zeros(g.vertex_count());
    r.d_balanced = true;
    r.method = SolveMethod::kernel_trivial;
    r.bdf_count = 1;
    r.nullity = 0;
    return r;
  }
  if (kd.dim > limits.max_free_enumeration)
    throw resource_error("gamma_bd: kernel nullity " + std::to_string(kd.dim) +
                             " exceeds max_free_enumeration " +
                             std::to_string(limits.max_free_enumeration),
                         kd.dim);

  struct Acc {
    std::uint64_t count = 0;
    long long best_weight = std::numeric_limits<long long>::min();
    std::optional<Labeling> best;
  };
  const detail::KernelEnumPlan plan(kd);
  const std::size_t prefix = detail::chunk_prefix_len(kd.dim, limits.workers);
  const std::uint64_t chunks = detail::pow3(prefix);
  std::vector<Acc> per_chunk(chunks);
  detail::run_chunks(chunks, limits.workers, [&](std::uint64_t c) {
    Acc& acc = per_chunk[c];
    detail::enumerate_chunk(plan, c, prefix, [&](const std::vector<int>& values) {
      ++acc.count;
      Labeling lab(values);
      if (lab.weight() > acc.best_weight ||
          (lab.weight() == acc.best_weight && (!acc.best || lab < *acc.best))) {
        acc.best_weight = lab.weight();
        acc.best = std::move(lab);
      }
    });
  });

  GammaResult r;
  r.method = SolveMethod::kernel_enumeration;
  r.nullity = kd.dim;
  std::uint64_t count = 0;
  Acc merged;
  for (const Acc& acc : per_chunk) {
    count += acc.count;
    if (!acc.best) continue;
    if (acc.best_weight > merged.best_weight ||
        (acc.best_weight == merged.best_weight &&
         (!merged.best || *acc.best < *merged.best))) {
      merged.best_weight = acc.best_weight;
      merged.best = acc.best;
    }
  }
  r.bdf_count = count;
  r.gamma = merged.best_weight;
  r.witness = *merged.best;
  r.d_balanced = (r.gamma == 0);
  return r;
}

}  // namespace baldom
