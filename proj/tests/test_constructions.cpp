#include "tribook/constructions.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "tribook/canonical.hpp"
#include "tribook/census.hpp"

using namespace tribook;

TEST_CASE("balanced bipartite basics") {
  const Graph k22 = balanced_bipartite(4);
  CHECK(k22.edge_count() == 4);
  CHECK(triangle_count(k22) == 0);
  CHECK(balanced_bipartite(9).edge_count() == 20);
  CHECK(balanced_bipartite(1).edge_count() == 0);
  CHECK(balanced_bipartite(0).vertex_count() == 0);
}

TEST_CASE("prism blow-up realizes the part adjacency rule") {
  PrismSpec prism;
  prism.part_sizes = {1, 1, 1, 1, 1, 1};
  const Graph p = prism_blowup(prism);
  CHECK(p.vertex_count() == 6);
  CHECK(p.edge_count() == 9);
  CHECK(triangle_count(p) == 2);
  CHECK(prism_expected_triangles(prism) == 2);

  // The §-style equality case: n/6 vertices per part at n = 12.
  PrismSpec even;
  even.part_sizes = {2, 2, 2, 2, 2, 2};
  const Graph blown = prism_blowup(even);
  CHECK(blown.vertex_count() == 12);
  CHECK(blown.edge_count() == 36);
  CHECK(triangle_count(blown) == 16);
  CHECK(prism_expected_triangles(even) == 16);

  PrismSpec s29_spec;
  s29_spec.part_sizes = {2, 2, 0, 2, 2, 1};
  CHECK(are_isomorphic(prism_blowup(s29_spec), s_graph(2, 9).graph));
}

TEST_CASE("balanced prism blow-up: the equality-case shape") {
  // With k = n/6 vertices in every part: n²/4 edges, n³/108 triangles,
  // book number n/6, and the Bollobás–Nikiforov inequality is tight
  // (both sides vanish: the graph is n/2-regular with b = n/6).
  for (long long k = 1; k <= 5; ++k) {
    PrismSpec spec;
    spec.part_sizes = {k, k, k, k, k, k};
    const Graph g = prism_blowup(spec);
    const long long n = 6 * k;
    CHECK(g.edge_count() == n * n / 4);
    CHECK(triangle_count(g) == n * n * n / 108);
    CHECK(book_number(g) == n / 6);
    const BnCheck bn = bn_inequality_check(g);
    CHECK(bn.lhs == 0);
    CHECK(bn.rhs == 0);
  }
}

TEST_CASE("prism triangle formula matches the brute census") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 60; ++round) {
    PrismSpec spec;
    long long total = 0;
    for (auto& s : spec.part_sizes) {
      s = static_cast<long long>(rng() % 5);
      total += s;
    }
    if (total > 24) continue;
    const Graph g = prism_blowup(spec);
    CHECK(oracle::brute_triangle_count(g) == prism_expected_triangles(spec));
  }
}

TEST_CASE("s_graph: degenerate and frozen cases") {
  for (int n : {0, 1, 2, 5, 8, 9}) CHECK(s_graph(0, n).graph == balanced_bipartite(n));

  const auto s29 = s_graph(2, 9);
  CHECK(s29.graph.edge_count() == 20);
  CHECK(triangle_count(s29.graph) == 4);
  CHECK(book_number(s29.graph) == 2);
  CHECK(s29.expected_edges == 20);
  CHECK(s29.expected_triangles == 4);
  CHECK(s29.expected_book_number == 2);

  const auto s312 = s_graph(3, 12);
  CHECK(s312.graph.edge_count() == 36);
  CHECK(triangle_count(s312.graph) == 0);
  CHECK(are_isomorphic(s312.graph, balanced_bipartite(12)));
  CHECK(s312.expected_book_number == 0);

  CHECK_THROWS_AS(s_graph(3, 11), std::invalid_argument);
  CHECK_THROWS_AS(s_graph(-1, 4), std::invalid_argument);
}

TEST_CASE("s_graph closed forms hold across the parameter sweep") {
  for (int n = 0; n <= 30; ++n) {
    for (int b = 0; 4 * b <= n; ++b) {
      const auto r = s_graph(b, n);
      CHECK(r.graph.edge_count() == static_cast<long long>(n) * n / 4);
      CHECK(triangle_count(r.graph) == r.expected_triangles);
      CHECK(book_number(r.graph) == r.expected_book_number);
      if (n <= 12) CHECK(oracle::brute_triangle_count(r.graph) == r.expected_triangles);
    }
  }
}

TEST_CASE("mubayi_upper frozen examples") {
  // (b, n) = (2, 10): parts (3,3,2 | 1,1,0), 28 edges and 18 triangles
  // before deletion, then two deletions of b+1 = 3 triangles each.
  const auto m210 = mubayi_upper(2, 10);
  CHECK(m210.graph.edge_count() == 26);
  CHECK(oracle::brute_triangle_count(m210.graph) == 12);
  CHECK(oracle::brute_book_number(m210.graph) == 3);
  CHECK(m210.expected_edges == 26);
  CHECK(m210.expected_triangles == 12);
  CHECK(m210.deleted_edges.size() == 2);
  CHECK(m210.deleted_edges[0].first == m210.deleted_edges[1].first);  // shared U1 endpoint

  const auto m29 = mubayi_upper(2, 9);
  CHECK(m29.graph.edge_count() == 21);  // ⌊81/4⌋ + 1
  CHECK(oracle::brute_triangle_count(m29.graph) == 6);  // 4 + 9 - 4 - 3
  CHECK(m29.deleted_edges.size() == 1);

  const auto m16 = mubayi_upper(1, 6);  // octahedron minus two edges
  CHECK(m16.graph.edge_count() == 10);
  CHECK(oracle::brute_triangle_count(m16.graph) == 4);
  CHECK(oracle::brute_book_number(m16.graph) <= 2);

  CHECK_THROWS_AS(mubayi_upper(2, 13), std::invalid_argument);  // b < n/6
  CHECK_THROWS_AS(mubayi_upper(3, 12), std::invalid_argument);  // b = n/4
  CHECK_THROWS_AS(mubayi_upper(0, 2), std::invalid_argument);
}

TEST_CASE("mubayi_upper pre-deletion deltas match the closed forms") {
  for (int n = 5; n <= 30; ++n) {
    for (int b = 1; 4 * b < n; ++b) {
      if (6 * b < n) continue;
      const auto shifted = mubayi_upper(b, n);
      const Graph pre = prism_blowup(shifted.spec);
      const auto base = s_graph(b, n);
      const long long edge_delta = pre.edge_count() - base.graph.edge_count();
      const long long tri_delta = triangle_count(pre) - triangle_count(base.graph);
      if (n % 2 == 0) {
        CHECK(edge_delta == 3);
        CHECK(tri_delta == n);
      } else {
        CHECK(edge_delta == 2);
        CHECK(tri_delta == n - 2 * b);
      }
    }
  }
}

TEST_CASE("mubayi_upper postconditions across the legal range") {
  for (int n = 5; n <= 30; ++n) {
    for (int b = 1; 4 * b < n; ++b) {
      if (6 * b < n) continue;
      const auto r = mubayi_upper(b, n);
      CHECK(r.graph.edge_count() == static_cast<long long>(n) * n / 4 + 1);
      CHECK(triangle_count(r.graph) == r.expected_triangles);
      CHECK(book_number(r.graph) <= b + 1);
      const long long rest = n - 4LL * b;
      const long long expected = n % 2 == 0
                                     ? b * b * rest + n - 2 * (b + 1)
                                     : b * b * rest + n - 2 * b - (b + 1);
      CHECK(r.expected_triangles == expected);
    }
  }
}
