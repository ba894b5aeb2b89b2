#include "tribook/census.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tribook/constructions.hpp"

using namespace tribook;

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

TEST_CASE("triangle counts on the standard graphs") {
  CHECK(triangle_count(complete(4)) == 4);
  CHECK(triangle_count(balanced_bipartite(7)) == 0);
  CHECK(triangle_count(Graph(0)) == 0);
  const auto s29 = s_graph(2, 9);
  CHECK(oracle::brute_triangle_count(s29.graph) == 4);  // b²(n-4b) = 4·1
  CHECK(triangle_count(s29.graph) == 4);
}

TEST_CASE("fast triangle count matches the cubic oracle") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 300; ++round) {
    const int n = static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(n, 1 + static_cast<int>(rng() % 9), rng);
    CHECK(triangle_count(g) == oracle::brute_triangle_count(g));
  }
}

TEST_CASE("book profile") {
  const BookProfile k5 = book_profile(complete(5));
  CHECK(k5.book_number == 3);
  CHECK(k5.triangle_count == 10);
  CHECK(k5.degree_square_sum == 5 * 16);
  for (const auto& [edge, pages] : k5.per_edge) CHECK(pages == 3);

  CHECK(book_profile(cycle(5)).book_number == 0);
  const auto s29 = s_graph(2, 9);
  CHECK(oracle::brute_book_number(s29.graph) == 2);
  const BookProfile p = book_profile(s29.graph);
  CHECK(p.book_number == 2);
  CHECK(p.per_edge.size() == 20);
  CHECK(book_profile(Graph(3)).book_number == 0);
}

TEST_CASE("codegree handshake: per-edge counts sum to 3t") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 200; ++round) {
    const int n = static_cast<int>(rng() % 14);
    const Graph g = oracle::random_graph(n, 1 + static_cast<int>(rng() % 9), rng);
    const BookProfile p = book_profile(g);
    long long sum = 0;
    for (const auto& [edge, pages] : p.per_edge) sum += pages;
    CHECK(sum == 3 * triangle_count(g));
    CHECK(p.triangle_count == triangle_count(g));
    CHECK(p.book_number == oracle::brute_book_number(g));
  }
}

TEST_CASE("Bollobás–Nikiforov check on frozen examples") {
  // K3: n=3, b=1, t=1, m=3, Σd² = 12: lhs 3, rhs 3.
  const BnCheck k3 = bn_inequality_check(complete(3));
  CHECK(k3.lhs == 3);
  CHECK(k3.rhs == 3);
  CHECK(k3.holds);
  // K_{2,2}: b = 0, t = 0: both sides vanish.
  const BnCheck k22 = bn_inequality_check(balanced_bipartite(4));
  CHECK(k22.lhs == 0);
  CHECK(k22.rhs == 0);
  CHECK(k22.holds);
  // K4: n=4, b=2, t=4, m=6, Σd² = 36: lhs 32, rhs 24.
  const BnCheck k4 = bn_inequality_check(complete(4));
  CHECK(k4.lhs == 32);
  CHECK(k4.rhs == 24);
  CHECK(k4.holds);
}

TEST_CASE("Bollobás–Nikiforov holds on a random corpus") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 500; ++round) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(n, 1 + static_cast<int>(rng() % 9), rng);
    CHECK(bn_inequality_check(g).holds);
  }
}

TEST_CASE("Rademacher and Edwards checks with applicability gate") {
  // K_{3,3} plus one edge: n=6, m=10 = ⌊36/4⌋+1: t = 3 >= 3, 6b = 18 >= 6.
  Graph g = balanced_bipartite(6);
  g.add_edge(0, 1);
  CHECK(triangle_count(g) == 3);
  CHECK(book_number(g) == 3);
  CHECK(rademacher_check(g) == BoundCheck::holds);
  CHECK(edwards_check(g) == BoundCheck::holds);

  // K4: m = 6 >= ⌊16/4⌋+1: t = 4 >= 2, 6·2 >= 4.
  CHECK(rademacher_check(complete(4)) == BoundCheck::holds);
  CHECK(edwards_check(complete(4)) == BoundCheck::holds);

  // C5: m = 5 < ⌊25/4⌋+1 = 7: below the Mantel threshold.
  CHECK(rademacher_check(cycle(5)) == BoundCheck::not_applicable);
  CHECK(edwards_check(cycle(5)) == BoundCheck::not_applicable);
}

TEST_CASE("balanced complete bipartite recognizer") {
  CHECK(is_balanced_complete_bipartite(Graph(0)));
  CHECK(is_balanced_complete_bipartite(Graph(1)));
  CHECK(is_balanced_complete_bipartite(balanced_bipartite(2)));
  CHECK(is_balanced_complete_bipartite(balanced_bipartite(9)));
  CHECK_FALSE(is_balanced_complete_bipartite(Graph(2)));
  CHECK_FALSE(is_balanced_complete_bipartite(complete(3)));
  CHECK_FALSE(is_balanced_complete_bipartite(cycle(6)));  // bipartite, not complete
  Graph unbalanced(5);  // K_{1,4}
  for (int v = 1; v < 5; ++v) unbalanced.add_edge(0, v);
  CHECK_FALSE(is_balanced_complete_bipartite(unbalanced));
  Graph nearly = balanced_bipartite(6);
  nearly.remove_edge(0, 3);
  CHECK_FALSE(is_balanced_complete_bipartite(nearly));
}
