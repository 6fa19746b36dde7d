#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <baldom/backtracking.hpp>
#include <baldom/generators.hpp>
#include <baldom/solver.hpp>

#include "testutil.hpp"

using namespace baldom;

TEST_CASE("oracle values on known instances") {
  const GammaResult p3 = backtracking_oracle(Graph(3, {{0, 1}, {1, 2}}));
  CHECK(p3.gamma == 0);
  CHECK(p3.bdf_count == 1);
  CHECK(p3.method == SolveMethod::backtracking);

  const GammaResult g23 = backtracking_oracle(grid(2, 3));
  CHECK(g23.gamma == 0);
  CHECK(g23.bdf_count == 3);  // zero plus the +/- two-row block

  CHECK(backtracking_oracle(polytope_d(5)).gamma == 0);
  CHECK(backtracking_oracle(caterpillar({2, {2, 2}})).gamma == 2);
}

TEST_CASE("oracle agrees with the kernel solver") {
  testutil::Lcg rng(47);
  std::vector<Graph> corpus = {antiprism(5), antiprism(6), grid(3, 4),
                               two_level_tree({4, {2, 2, 0, 0}}),
                               caterpillar({4, {1, 2, 0, 3}})};
  for (int trial = 0; trial < 30; ++trial)
    corpus.push_back(testutil::random_tree(rng, 2 + rng.below(13)));

  for (const Graph& g : corpus) {
    const GammaResult a = gamma_bd(g);
    const GammaResult b = backtracking_oracle(g);
    CHECK(a.gamma == b.gamma);
    CHECK(a.bdf_count == b.bdf_count);
    CHECK(a.witness == b.witness);

    auto kernel_set = enumerate_bdfs(g);
    std::vector<Labeling> oracle_set;
    for_each_bdf_backtracking(g, {}, [&](const Labeling& lab) {
      oracle_set.push_back(lab);
    });
    std::sort(kernel_set.begin(), kernel_set.end());
    std::sort(oracle_set.begin(), oracle_set.end());
    CHECK(kernel_set == oracle_set);
  }
}

TEST_CASE("every visited labeling is a BDF") {
  const Graph g = grid(3, 3);
  for_each_bdf_backtracking(g, {}, [&](const Labeling& lab) {
    CHECK(is_bdf(g, lab));
  });
}

TEST_CASE("node budget exhaustion raises a resource error") {
  SearchLimits limits;
  limits.node_budget = 5;
  CHECK_THROWS_AS(backtracking_oracle(grid(3, 3), limits), resource_error);
}
