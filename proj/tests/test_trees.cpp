#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <baldom/backtracking.hpp>
#include <baldom/generators.hpp>
#include <baldom/solver.hpp>
#include <baldom/trees.hpp>

#include "testutil.hpp"

using namespace baldom;

TEST_CASE("two-level verdict examples") {
  const TwoLevelVerdict a = two_level_verdict({3, {2, 0, 0}});
  CHECK(!a.d_balanced);
  CHECK(a.l_count == 1);
  CHECK(a.gamma_formula == 2);

  CHECK(two_level_verdict({3, {1, 0, 0}}).d_balanced);   // l_1 = 1 forces x_0 = 0
  CHECK(two_level_verdict({4, {2, 2, 0, 0}}).d_balanced);  // (n-1)/2 not integral

  const TwoLevelVerdict c = two_level_verdict({5, {2, 2, 0, 0, 0}});
  CHECK(!c.d_balanced);
  CHECK(c.gamma_formula == 4);

  CHECK_THROWS_AS(two_level_verdict({1, {0}}), std::invalid_argument);
}

TEST_CASE("two-level verdict matches the exact solver") {
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<std::size_t> leaves(n, 0);
    while (true) {
      const TwoLevelTreeSpec spec{n, leaves};
      const TwoLevelVerdict v = two_level_verdict(spec);
      const GammaResult r = gamma_bd(two_level_tree(spec));
      CHECK(v.d_balanced == (r.gamma == 0));
      CHECK(r.gamma == v.gamma_formula);
      std::size_t i = n;
      while (i > 0 && leaves[i - 1] == 4) leaves[--i] = 0;
      if (i == 0) break;
      ++leaves[i - 1];
    }
  }
}

TEST_CASE("full binary trees: root zero and d-balanced") {
  CHECK(full_binary_root_zero(full_binary_tree(fb_leaf()), Labeling::zeros(1)));
  const Graph cherry = full_binary_tree(fb_node(fb_leaf(), fb_leaf()));
  CHECK(full_binary_root_zero(cherry, Labeling::zeros(3)));
  CHECK_THROWS_AS(full_binary_root_zero(cherry, Labeling({1, -1, 0})),
                  std::invalid_argument);

  for (const auto& shape : enumerate_full_binary_shapes(9)) {
    CHECK(full_binary_d_balanced(shape));
    const Graph g = full_binary_tree(shape);
    const GammaResult r = gamma_bd(g);
    CHECK(r.gamma == 0);
    CHECK(r.bdf_count == 1);
    for (const Labeling& lab : enumerate_bdfs(g)) {
      CHECK(full_binary_root_zero(g, lab));
      // the zero labeling propagates through every internal vertex
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 2) CHECK(lab[v] == 0);
    }
  }
}

TEST_CASE("caterpillar MBDF search at spine length 2") {
  const auto results = caterpillar_mbdf_search(2);
  REQUIRE(results.size() == 4);
  // lexicographic spine order: (-1,-1), (-1,1), (1,-1), (1,1)
  CHECK(results[0].spine_labels == std::vector<int>{-1, -1});
  CHECK(results[0].leaf_counts == std::vector<std::size_t>{2, 2});
  CHECK(results[0].total_leaves == 4);
  CHECK(results[0].weight == 2);

  CHECK(results[1].spine_labels == std::vector<int>{-1, 1});
  CHECK(results[1].leaf_counts == std::vector<std::size_t>{0, 0});
  CHECK(results[1].total_leaves == 0);
  CHECK(results[1].weight == 0);

  CHECK(results[3].spine_labels == std::vector<int>{1, 1});
  CHECK(results[3].weight == -2);

  // L(C_2) = 0 is congruent to 3*2-2 = 4 (mod 4), and the bare path P_2
  // with labels (1,-1) really is a non-zero BDF
  auto [g, lab] = induced_caterpillar(results[2]);
  CHECK(g.vertex_count() == 2);
  CHECK(is_bdf(g, lab));
}

TEST_CASE("MBDF search results satisfy the paper's accounting") {
  const std::size_t expected_counts[] = {4, 8, 18, 38, 82, 176};
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto results = caterpillar_mbdf_search(n);
    CHECK(results.size() == expected_counts[n - 2]);
    for (const auto& a : results) {
      CHECK(a.pairs_same_sign + a.pairs_opposite + a.pairs_with_zero == n - 1);
      CHECK(a.pairs_with_zero % 2 == 0);
      CHECK(a.pair_sum == static_cast<long long>(a.pairs_same_sign) -
                              static_cast<long long>(a.pairs_opposite));
      CHECK(static_cast<long long>(a.total_leaves) ==
            static_cast<long long>(n) + 2 * a.pair_sum);
      CHECK(a.total_leaves % 4 == (3 * n - 2) % 4);
      auto [g, lab] = induced_caterpillar(a);
      CHECK(is_bdf(g, lab));
      CHECK(!lab.is_zero());
      CHECK(lab.weight() == a.weight);
    }
  }
  CHECK_THROWS_AS(caterpillar_mbdf_search(1), std::invalid_argument);
}

TEST_CASE("caterpillar gamma wrapper") {
  CHECK(caterpillar_gamma({2, {2, 2}}).gamma == 2);
  CHECK(caterpillar_gamma({2, {1, 1}}).gamma == 0);

  // no closed form for the figure instance: solver and oracle must agree
  const CaterpillarSpec fig{5, {2, 3, 0, 2, 4}};
  const GammaResult solver = caterpillar_gamma(fig);
  const GammaResult oracle = backtracking_oracle(caterpillar(fig));
  CHECK(solver.gamma == oracle.gamma);
  CHECK(solver.bdf_count == oracle.bdf_count);
}
