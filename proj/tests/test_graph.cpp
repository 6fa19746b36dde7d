#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <baldom/generators.hpp>
#include <baldom/graph.hpp>

#include "testutil.hpp"

using namespace baldom;

TEST_CASE("graph construction validates its invariants") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);

  const Graph g(4, {{2, 1}, {0, 1}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("closed neighborhoods") {
  const Graph k1(1, {});
  CHECK(closed_neighborhood(k1, 0) == std::vector<Vertex>{0});

  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(closed_neighborhood(p3, 1) == std::vector<Vertex>{0, 1, 2});

  // a_0 of A_5 sees its two cycle neighbors plus b_0 and b_4
  const Graph a5 = antiprism(5);
  CHECK(closed_neighborhood(a5, 0) == std::vector<Vertex>{0, 1, 4, 5, 9});

  CHECK_THROWS_AS(closed_neighborhood(p3, 3), std::invalid_argument);
}

TEST_CASE("operator matrix rows are closed neighborhoods") {
  const Graph k1(1, {});
  CHECK(operator_matrix(k1).rows == std::vector<std::vector<Vertex>>{{0}});

  const Graph p3(3, {{0, 1}, {1, 2}});
  const OperatorMatrix m = operator_matrix(p3);
  CHECK(m.dim == 3);
  CHECK(m.rows[0] == std::vector<Vertex>{0, 1});
  CHECK(m.rows[1] == std::vector<Vertex>{0, 1, 2});
  CHECK(m.rows[2] == std::vector<Vertex>{1, 2});

  // layer degrees of A_n are (4, 6, 4), so row sizes are 5 / 7 / 5
  const OperatorMatrix ma = operator_matrix(antiprism(5));
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(ma.rows[i].size() == 5);
    CHECK(ma.rows[5 + i].size() == 7);
    CHECK(ma.rows[10 + i].size() == 5);
  }
}

TEST_CASE("operator matrix is symmetric with unit diagonal") {
  testutil::Lcg rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testutil::random_tree(rng, 2 + rng.below(10));
    const OperatorMatrix m = operator_matrix(g);
    for (Vertex i = 0; i < m.dim; ++i) {
      CHECK(std::binary_search(m.rows[i].begin(), m.rows[i].end(), i));
      for (Vertex j : m.rows[i])
        CHECK(std::binary_search(m.rows[j].begin(), m.rows[j].end(), i));
    }
  }
}

TEST_CASE("is_bdf examples") {
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(is_bdf(p3, Labeling::zeros(3)));
  CHECK(is_bdf(antiprism(6), Labeling::zeros(18)));
  CHECK(is_bdf(grid(1, 5), Labeling({1, -1, 0, 1, -1})));
  CHECK(!is_bdf(p3, Labeling({1, -1, 0})));
  CHECK_THROWS_AS(is_bdf(p3, Labeling::zeros(4)), std::invalid_argument);
}

TEST_CASE("is_bdf agrees with the matrix-vector formulation") {
  testutil::Lcg rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.below(9);
    const Graph g = testutil::random_tree(rng, n);
    std::vector<int> values(n);
    for (auto& v : values) v = static_cast<int>(rng.below(3)) - 1;
    const Labeling lab(values);

    const OperatorMatrix m = operator_matrix(g);
    bool kernel_member = true;
    for (Vertex i = 0; i < n; ++i) {
      long long sum = 0;
      for (Vertex j : m.rows[i]) sum += lab[j];
      if (sum != 0) kernel_member = false;
    }
    CHECK(is_bdf(g, lab) == kernel_member);
    if (is_bdf(g, lab)) CHECK(is_bdf(g, lab.negated()));
  }
}

TEST_CASE("labeling validation and weight cache") {
  CHECK_THROWS_AS(Labeling({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Labeling({-2}), std::invalid_argument);
  const Labeling lab({1, -1, 1, 0});
  CHECK(lab.weight() == 1);
  CHECK(lab.negated().weight() == -1);
  CHECK(Labeling({-1, 0}) < Labeling({0, 0}));
  CHECK(Labeling({0, 0}) < Labeling({0, 1}));
}
