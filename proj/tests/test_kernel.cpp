#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <baldom/generators.hpp>
#include <baldom/kernel.hpp>

#include "testutil.hpp"

using namespace baldom;

TEST_CASE("kernel dimensions on small graphs") {
  CHECK(kernel(Graph(1, {})).dim == 0);
  CHECK(kernel(grid(1, 3)).dim == 0);
  CHECK(kernel(grid(1, 5)).dim == 1);
  CHECK(kernel(antiprism(5)).dim == 0);
  CHECK(kernel(antiprism(6)).dim == 2);
}

TEST_CASE("grid(1,5) kernel is spanned by the strip labeling") {
  const KernelDescription kd = kernel(grid(1, 5));
  REQUIRE(kd.dim == 1);
  CHECK(kd.pivot_cols == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(kd.free_cols == std::vector<Vertex>{4});
  const auto x = kernel_substitute(kd, {Rational(-1)});
  const std::vector<Rational> expected{1, -1, 0, 1, -1};
  CHECK(x == expected);
}

TEST_CASE("pivot and free columns partition the vertex set") {
  testutil::Lcg rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testutil::random_tree(rng, 2 + rng.below(12));
    const KernelDescription kd = kernel(g);
    CHECK(kd.pivot_cols.size() + kd.free_cols.size() == g.vertex_count());
    CHECK(kd.dim == kd.free_cols.size());
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex v : kd.pivot_cols) seen[v] = true;
    for (Vertex v : kd.free_cols) {
      CHECK(!seen[v]);
      seen[v] = true;
    }
    for (bool s : seen) CHECK(s);
  }
}

TEST_CASE("random rational substitutions are annihilated by M(G)") {
  const std::vector<Graph> corpus = {grid(1, 5),
                                     grid(2, 3),
                                     antiprism(6),
                                     polytope_r2(6),
                                     caterpillar({2, {2, 2}}),
                                     two_level_tree({3, {2, 0, 0}})};
  testutil::Lcg rng(101);
  for (const Graph& g : corpus) {
    const KernelDescription kd = kernel(g);
    const OperatorMatrix m = operator_matrix(g);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> free_values;
      for (std::size_t i = 0; i < kd.dim; ++i) {
        const long long p = static_cast<long long>(rng.below(21)) - 10;
        const long long q = 1 + static_cast<long long>(rng.below(9));
        free_values.emplace_back(p, q);
      }
      const auto x = kernel_substitute(kd, free_values);
      for (Vertex i = 0; i < m.dim; ++i) {
        Rational sum(0);
        for (Vertex j : m.rows[i]) sum += x[j];
        CHECK(sum == 0);
      }
    }
  }
}

TEST_CASE("kernel output is reproducible") {
  const Graph g = polytope_d(6);
  const KernelDescription a = kernel(g);
  const KernelDescription b = kernel(g);
  CHECK(a.pivot_cols == b.pivot_cols);
  CHECK(a.free_cols == b.free_cols);
  CHECK(a.expression == b.expression);
}
