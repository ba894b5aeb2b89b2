#ifndef TRIBOOK_CENSUS_HPP
#define TRIBOOK_CENSUS_HPP

#include <map>
#include <utility>

#include "tribook/graph.hpp"

namespace tribook {

// Exact per-edge triangle statistics. per_edge maps each edge (u, v) with
// u < v to its triangle count (the codegree of its endpoints); book_number
// is the maximum over edges, 0 for an edgeless graph.
struct BookProfile {
  std::map<std::pair<int, int>, long long> per_edge;
  long long book_number = 0;
  long long triangle_count = 0;
  long long degree_square_sum = 0;
};

// Exact t(G) via sorted adjacency intersections per edge. The naive cubic
// triple scan lives in the test suite as the correctness oracle.
long long triangle_count(const Graph& g);

long long book_number(const Graph& g);

BookProfile book_profile(const Graph& g);

// Bollobás–Nikiforov: (6b - n)·t >= b·(Σ d(v)² - n·m). Holds on every
// graph; the check returns both sides so violations would carry evidence.
struct BnCheck {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = true;
};
BnCheck bn_inequality_check(const Graph& g);

// Rademacher (t >= ⌊n/2⌋) and Edwards (6·b >= n) apply to graphs with
// m >= ⌊n²/4⌋ + 1; below that threshold they report not_applicable.
enum class BoundCheck { not_applicable, holds, fails };
BoundCheck rademacher_check(const Graph& g);
BoundCheck edwards_check(const Graph& g);

// True exactly for K_{⌊n/2⌋,⌈n/2⌉} (on 0 or 1 vertices: the edgeless graph).
bool is_balanced_complete_bipartite(const Graph& g);

}  // namespace tribook

#endif  // TRIBOOK_CENSUS_HPP
