#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <baldom/generators.hpp>
#include <baldom/solver.hpp>

#include "testutil.hpp"

using namespace baldom;

TEST_CASE("gamma of the paper families at small n") {
  const GammaResult a5 = gamma_bd(antiprism(5));
  CHECK(a5.gamma == 0);
  CHECK(a5.d_balanced);
  CHECK(a5.method == SolveMethod::kernel_trivial);
  CHECK(a5.bdf_count == 1);
  CHECK(a5.nullity == 0);

  // A_6 has a 2-dimensional kernel but all seven BDFs have weight 0
  const GammaResult a6 = gamma_bd(antiprism(6));
  CHECK(a6.gamma == 0);
  CHECK(a6.method == SolveMethod::kernel_enumeration);
  CHECK(a6.nullity == 2);
  CHECK(a6.bdf_count == 7);
}

TEST_CASE("gamma of small trees with known values") {
  const GammaResult ds = gamma_bd(caterpillar({2, {2, 2}}));
  CHECK(ds.gamma == 2);
  CHECK(!ds.d_balanced);
  CHECK(ds.witness == Labeling({-1, -1, 1, 1, 1, 1}));

  CHECK(gamma_bd(two_level_tree({3, {2, 0, 0}})).gamma == 2);
  CHECK(gamma_bd(two_level_tree({3, {1, 0, 0}})).gamma == 0);
}

TEST_CASE("enumerate_bdfs examples") {
  CHECK(enumerate_bdfs(Graph(1, {})) ==
        std::vector<Labeling>{Labeling::zeros(1)});

  // ordered by the free coordinate x_4 = -1, 0, 1
  const auto strip = enumerate_bdfs(grid(1, 5));
  REQUIRE(strip.size() == 3);
  CHECK(strip[0] == Labeling({1, -1, 0, 1, -1}));
  CHECK(strip[1] == Labeling::zeros(5));
  CHECK(strip[2] == Labeling({-1, 1, 0, -1, 1}));

  CHECK(enumerate_bdfs(grid(4, 4)).size() == 7);
}

TEST_CASE("enumeration is closed under negation and contains zero") {
  for (const Graph& g : {antiprism(6), grid(2, 5), caterpillar({3, {2, 1, 2}})}) {
    const auto all = enumerate_bdfs(g);
    CHECK(std::find(all.begin(), all.end(), Labeling::zeros(g.vertex_count())) !=
          all.end());
    for (const Labeling& lab : all) {
      CHECK(is_bdf(g, lab));
      CHECK(std::find(all.begin(), all.end(), lab.negated()) != all.end());
    }
  }
}

TEST_CASE("solver agrees with exhaustive brute force") {
  testutil::Lcg rng(31);
  std::vector<Graph> corpus = {Graph(1, {}),
                               Graph(2, {{0, 1}}),
                               Graph(3, {{0, 1}, {1, 2}}),
                               grid(2, 3),
                               grid(3, 3),
                               caterpillar({3, {1, 0, 2}}),
                               two_level_tree({2, {1, 1}}),
                               two_level_tree({3, {2, 0, 0}})};
  for (int trial = 0; trial < 20; ++trial)
    corpus.push_back(testutil::random_tree(rng, 2 + rng.below(10)));

  for (const Graph& g : corpus) {
    auto expected = testutil::brute_force_bdfs(g);
    auto actual = enumerate_bdfs(g);
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);

    const GammaResult r = gamma_bd(g);
    CHECK(r.gamma == testutil::brute_force_gamma(g));
    CHECK(r.bdf_count == expected.size());
    CHECK(is_bdf(g, r.witness));
    CHECK(r.witness.weight() == r.gamma);
    if (r.nullity == 0) {
      CHECK(r.bdf_count == 1);
      CHECK(r.gamma == 0);
    }
  }
}

TEST_CASE("witness tie-break picks the lexicographically smallest maximum") {
  // all three BDFs of the 1x5 strip have weight 0; the all-minus-one variant
  // of the non-zero pair sorts first
  const GammaResult r = gamma_bd(grid(1, 5));
  CHECK(r.gamma == 0);
  CHECK(r.witness == Labeling({-1, 1, 0, -1, 1}));
}

TEST_CASE("nullity beyond the enumeration bound raises a resource error") {
  // disjoint union of k edges has nullity k
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; v += 2) edges.emplace_back(v, v + 1);
  const Graph g(8, edges);
  SearchLimits limits;
  limits.max_free_enumeration = 3;
  try {
    gamma_bd(g, limits);
    FAIL("expected resource_error");
  } catch (const resource_error& e) {
    CHECK(e.nullity() == 4);
  }
  CHECK_THROWS_AS(enumerate_bdfs(g, limits), resource_error);
}

TEST_CASE("results are identical for any worker count") {
  const Graph g = antiprism(6);
  SearchLimits serial, parallel;
  parallel.workers = 3;
  CHECK(enumerate_bdfs(g, serial) == enumerate_bdfs(g, parallel));

  const GammaResult a = gamma_bd(g, serial);
  const GammaResult b = gamma_bd(g, parallel);
  CHECK(a.gamma == b.gamma);
  CHECK(a.witness == b.witness);
  CHECK(a.bdf_count == b.bdf_count);

  // union of edges: nullity 4, 81 assignments, all valid
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; v += 2) edges.emplace_back(v, v + 1);
  const Graph u(8, edges);
  CHECK(enumerate_bdfs(u, serial).size() == 81);
  CHECK(enumerate_bdfs(u, serial) == enumerate_bdfs(u, parallel));
}
