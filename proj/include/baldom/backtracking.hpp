#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "baldom/errors.hpp"
#include "baldom/graph.hpp"
#include "baldom/solver.hpp"

namespace baldom {

namespace detail {

// Depth-first assignment over vertices in BFS order with unit propagation:
// a closed-neighborhood constraint with one unassigned member forces it, a
// fully assigned constraint with nonzero sum prunes, and |partial sum| can
// never exceed the number of members still unassigned.
template <typename Visit>
class BdfBacktracker {
 public:
  BdfBacktracker(const Graph& g, std::uint64_t node_budget, Visit& visit)
      : budget_(node_budget),
        visit_(visit),
        cn_(operator_matrix(g).rows),
        order_(bfs_order(g)),
        values_(g.vertex_count(), 0),
        assigned_(g.vertex_count(), false),
        sum_(g.vertex_count(), 0),
        open_(g.vertex_count(), 0) {
    for (Vertex v = 0; v < cn_.size(); ++v)
      open_[v] = static_cast<int>(cn_[v].size());
  }

  void run() {
    if (order_.empty()) {
      visit_(Labeling::zeros(0));
      return;
    }
    search(0);
  }

 private:
  // Applies one assignment plus everything it forces. On conflict the trail
  // is rolled back and false is returned.
  bool propagate(Vertex v0, int val0, std::vector<Vertex>& trail) {
    std::vector<std::pair<Vertex, int>> queue{{v0, val0}};
    std::size_t head = 0;
    while (head < queue.size()) {
      auto [v, val] = queue[head++];
      if (assigned_[v]) {
        if (values_[v] != val) {
          undo(trail);
          return false;
        }
        continue;
      }
      if (++nodes_ > budget_)
        throw resource_error("backtracking_oracle: node budget exhausted");
      assigned_[v] = true;
      values_[v] = val;
      const auto& constraints = cn_[v];
      bool conflict = false;
      std::size_t applied = 0;  // constraints of v updated so far
      for (std::size_t k = 0; k < constraints.size(); ++k) {
        const Vertex c = constraints[k];
        sum_[c] += val;
        open_[c] -= 1;
        applied = k + 1;
        const int s = sum_[c], o = open_[c];
        if (s > o || -s > o) {
          conflict = true;
          break;
        }
        if (o == 1) {
          // the lone unassigned member of N[c] is forced to -s
          for (Vertex u : cn_[c]) {
            if (!assigned_[u]) {
              queue.emplace_back(u, -s);
              break;
            }
          }
        }
      }
      if (conflict) {
        // roll back only the applied prefix of v's constraints, then the trail
        for (std::size_t k = 0; k < applied; ++k) {
          const Vertex c = constraints[k];
          sum_[c] -= val;
          open_[c] += 1;
        }
        assigned_[v] = false;
        values_[v] = 0;
        undo(trail);
        return false;
      }
      trail.push_back(v);
    }
    return true;
  }

  void undo(std::vector<Vertex>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      const Vertex v = *it;
      for (Vertex c : cn_[v]) {
        sum_[c] -= values_[v];
        open_[c] += 1;
      }
      assigned_[v] = false;
      values_[v] = 0;
    }
    trail.clear();
  }

  void search(std::size_t pos) {
    while (pos < order_.size() && assigned_[order_[pos]]) ++pos;
    if (pos == order_.size()) {
      visit_(Labeling(std::vector<int>(values_.begin(), values_.end())));
      return;
    }
    const Vertex v = order_[pos];
    for (int val = -1; val <= 1; ++val) {
      std::vector<Vertex> trail;
      if (propagate(v, val, trail)) {
        search(pos + 1);
        undo(trail);
      }
    }
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Visit& visit_;
  std::vector<std::vector<Vertex>> cn_;  // closed neighborhoods
  std::vector<Vertex> order_;
  std::vector<int> values_;
  std::vector<bool> assigned_;
  std::vector<int> sum_;   // partial closed-neighborhood sums
  std::vector<int> open_;  // unassigned members per constraint
};

}  // namespace detail

// Visits every BDF of g exactly once. Independent of the kernel path.
template <typename Visit>
void for_each_bdf_backtracking(const Graph& g, const SearchLimits& limits,
                               Visit&& visit) {
  detail::BdfBacktracker<Visit> bt(g, limits.node_budget, visit);
  bt.run();
}

// Cross-check path for gamma_bd: exhaustive DFS with the same gamma, count
// and witness tie-break semantics.
inline GammaResult backtracking_oracle(const Graph& g,
                                       const SearchLimits& limits = {}) {
  GammaResult r;
  r.method = SolveMethod::backtracking;
  std::uint64_t count = 0;
  long long best = std::numeric_limits<long long>::min();
  std::optional<Labeling> witness;
  for_each_bdf_backtracking(g, limits, [&](const Labeling& lab) {
    ++count;
    if (lab.weight() > best || (lab.weight() == best && (!witness || lab < *witness))) {
      best = lab.weight();
      witness = lab;
    }
  });
  r.bdf_count = count;
  r.gamma = best;
  r.witness = *witness;
  r.d_balanced = (r.gamma == 0);
  return r;
}

}  // namespace baldom
