#ifndef TRIBOOK_BIPARTITE_HPP
#define TRIBOOK_BIPARTITE_HPP

#include <span>
#include <vector>

#include "tribook/graph.hpp"
#include "tribook/rational.hpp"

namespace tribook {

// Result of the neighborhood max-cut: sides N(x) and its complement for
// the best pivot x, the edges that would have to go, and the guaranteed
// ceiling m - 4m²/n² + 6t/n. deleted_edges <= bound always holds for the
// minimizing pivot.
struct CutResult {
  int pivot = -1;
  std::vector<int> side_n;     // N(pivot)
  std::vector<int> side_rest;  // complement (contains the pivot)
  long long deleted_edges = 0; // e(side_n) + e(side_rest)
  Rational bound;
};

// Tries every vertex as pivot and returns the one minimizing
// e(N(x)) + e(complement); ties go to the smallest label. The averaging
// argument guarantees the minimum meets the bound, so this is the
// derandomized form of the random-pivot proof.
CutResult lemma1_cut(const Graph& g);

// Result of the induced-bipartite extraction: the initial cut (a0, b0),
// the degree-filtered sides (a, b), and whatever fell out. a and b are
// always independent sets — when the book-number hypothesis fails the
// filtered sides are additionally pruned to independence — so g[a ∪ b] is
// bipartite unconditionally.
struct ExtractionResult {
  std::vector<int> a0, b0;
  std::vector<int> a, b;
  std::vector<int> removed;
  Rational c;
  long long b_cap = 0;
  bool guarantee_applies = false;
  Rational removed_bound;  // 48 t / (c n²)
};

// Keeps every a0-vertex with more than (b_cap + |b0|)/2 neighbors in b0
// and symmetrically for b0. guarantee_applies records whether the
// hypotheses m >= n²/4, t <= c²n³/24 and b(G) <= (1/2 - c)n all hold, in
// exact rationals; in that case |removed| <= 48t/(c n²).
ExtractionResult lemma2_extract(const Graph& g, const Rational& c, long long b_cap);

// Every vertex of xs and ys present exactly once, both sets independent.
bool induces_bipartite_with_sides(const Graph& g, std::span<const int> xs,
                                  std::span<const int> ys);

}  // namespace tribook

#endif  // TRIBOOK_BIPARTITE_HPP
