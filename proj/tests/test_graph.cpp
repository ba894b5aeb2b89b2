#include "tribook/graph.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tribook/constructions.hpp"

using tribook::Graph;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("degree on the standard small graphs") {
  const Graph k4 = complete(4);
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  const Graph edgeless(5);
  for (int v = 0; v < 5; ++v) CHECK(edgeless.degree(v) == 0);
  const Graph c5 = cycle(5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK_THROWS_AS(k4.degree(4), std::invalid_argument);
  CHECK_THROWS_AS(k4.degree(-1), std::invalid_argument);
}

TEST_CASE("codegree on the standard small graphs") {
  const Graph k5 = complete(5);
  CHECK(k5.codegree(0, 1) == 3);
  CHECK(k5.codegree(2, 4) == 3);
  const Graph c5 = cycle(5);
  CHECK(c5.codegree(0, 1) == 0);  // adjacent pair
  const Graph k22 = tribook::balanced_bipartite(4);
  CHECK(k22.codegree(0, 1) == 2);  // same side
  CHECK_THROWS_AS(k5.codegree(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(k5.codegree(0, 9), std::invalid_argument);
}

TEST_CASE("cross_edges counts one-each-side edges") {
  const Graph k33 = tribook::balanced_bipartite(6);
  const std::vector<int> left{0, 1, 2};
  const std::vector<int> right{3, 4, 5};
  CHECK(k33.cross_edges(left, right) == 9);
  CHECK(k33.cross_edges({}, right) == 0);
  CHECK_THROWS_AS(k33.cross_edges(left, left), std::invalid_argument);

  // S_{2,9}: e(U1, V1) = 4, by direct enumeration over the adjacency rule
  // (U1 complete to V1, both of size 2).
  const auto s29 = tribook::s_graph(2, 9);
  const auto [u1b, u1e] = s29.spec.part_range(0);
  const auto [v1b, v1e] = s29.spec.part_range(3);
  std::vector<int> u1, v1;
  for (int v = u1b; v < u1e; ++v) u1.push_back(v);
  for (int v = v1b; v < v1e; ++v) v1.push_back(v);
  long long direct = 0;
  for (int u : u1)
    for (int v : v1)
      if (s29.graph.has_edge(u, v)) ++direct;
  CHECK(direct == 4);
  CHECK(s29.graph.cross_edges(u1, v1) == 4);
}

TEST_CASE("mutations keep symmetry, loop-freeness and the degree sum") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + static_cast<int>(rng() % 20);
    Graph g = tribook::oracle::random_graph(n, 5, rng);
    long long degree_sum = 0;
    for (int v = 0; v < n; ++v) {
      degree_sum += g.degree(v);
      for (int w : g.neighbors(v)) {
        CHECK(g.has_edge(w, v));
        CHECK(w != v);
      }
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  g.add_edge(0, 1);
  g.add_edge(0, 1);  // idempotent
  CHECK(g.edge_count() == 1);
  g.remove_edge(0, 1);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("json edge list import") {
  const Graph g = Graph::from_json_text(R"({"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(3, 0));
  CHECK_THROWS_AS(Graph::from_json_text("not json"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_json_text(R"({"edges": []})"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_json_text(R"({"n": 2, "edges": [[0]]})"), std::invalid_argument);
}
