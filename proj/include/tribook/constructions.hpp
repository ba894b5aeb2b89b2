#ifndef TRIBOOK_CONSTRUCTIONS_HPP
#define TRIBOOK_CONSTRUCTIONS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tribook/graph.hpp"

namespace tribook {

// Part sizes of a 3-prism blow-up, in the fixed layout order
// U1, U2, U3, V1, V2, V3. Vertices are labeled contiguously in that order
// so the same spec always produces the same labeled graph (and the same
// graph6 line).
struct PrismSpec {
  std::array<long long, 6> part_sizes{};

  long long total() const;
  // Index range [begin, end) of part i in the built graph.
  std::pair<int, int> part_range(int i) const;
};

// Adjacency rule: U_i complete to U_j (i != j), V_i complete to V_j
// (i != j), U_i complete to V_i, nothing else. The only triangles are the
// two blown-up prism faces, |U1||U2||U3| + |V1||V2||V3| in total.
Graph prism_blowup(const PrismSpec& spec);

long long prism_expected_triangles(const PrismSpec& spec);

// K_{⌊n/2⌋,⌈n/2⌉}: the Mantel extremal graph, ⌊n²/4⌋ edges, no triangles.
Graph balanced_bipartite(long long n);

// S_{b,n}: the prism blow-up with |U1|=|U2|=|V1|=|V2|=b,
// |U3|=⌊(n-4b)/2⌋, |V3|=⌈(n-4b)/2⌉. Exactly ⌊n²/4⌋ edges and b²(n-4b)
// triangles; the true book number is max(b, ⌈(n-4b)/2⌉), which is b
// whenever 6b >= n.
struct SGraphResult {
  Graph graph;
  PrismSpec spec;
  long long expected_edges = 0;
  long long expected_triangles = 0;
  long long expected_book_number = 0;
};
SGraphResult s_graph(long long b, long long n);

// The matching upper-bound construction: shift one vertex from each V_i to
// the corresponding U_i, then delete two edges in b+1 triangles sharing a
// U1 endpoint (n even) or one such edge (n odd). The result has
// ⌊n²/4⌋ + 1 edges, book number at most b+1, and exactly
// b²(n-4b) + n - 2(b+1) triangles for even n,
// b²(n-4b) + n - 2b - (b+1) for odd n. Requires n/6 <= b < n/4 and b >= 1.
struct MubayiUpperResult {
  Graph graph;
  PrismSpec spec;  // part sizes after the vertex shift
  long long expected_edges = 0;
  long long expected_triangles = 0;
  long long book_number_cap = 0;  // b + 1
  std::vector<std::pair<int, int>> deleted_edges;
  std::string notes;  // records the deterministic choices made
};
MubayiUpperResult mubayi_upper(long long b, long long n);

}  // namespace tribook

#endif  // TRIBOOK_CONSTRUCTIONS_HPP
