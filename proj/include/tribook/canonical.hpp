#ifndef TRIBOOK_CANONICAL_HPP
#define TRIBOOK_CANONICAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tribook/graph.hpp"

namespace tribook {
namespace canon {

constexpr int kMaxVertices = 32;

// Dense adjacency rows for the canonization and enumeration kernels.
// Limited to 32 vertices, far beyond anything the search paths visit.
struct MaskGraph {
  int n = 0;
  std::array<uint32_t, kMaxVertices> adj{};

  void add_edge(int u, int v) {
    adj[static_cast<size_t>(u)] |= 1u << v;
    adj[static_cast<size_t>(v)] |= 1u << u;
  }
  bool has_edge(int u, int v) const { return (adj[static_cast<size_t>(u)] >> v) & 1u; }
  long long edge_count() const;
};

MaskGraph to_mask(const Graph& g);
Graph to_graph(const MaskGraph& g);

// Canonical form: row i holds the adjacency bits of the vertex at
// canonical position i toward positions j < i, so keys compare
// lexicographically and prefixes are meaningful during the search.
using Key = std::vector<uint32_t>;

struct CanonResult {
  Key key;
  std::vector<int> position_of;  // vertex -> canonical position
  // Automorphism generators discovered as equal-key leaves (vertex ->
  // vertex maps). Not necessarily a full generating set; every entry is a
  // genuine automorphism.
  std::vector<std::vector<int>> automorphisms;
};

// Iterative refinement on degree/codegree-style cell counts, then
// individualization of the first non-discrete cell with backtracking;
// prefix comparison and discovered automorphisms prune the tree.
CanonResult canonize(const MaskGraph& g);
CanonResult canonize_colored(const MaskGraph& g, const std::vector<int>& colors);

Key canonical_key(const MaskGraph& g);
// Key with one vertex individualized; two vertices are in the same
// automorphism orbit iff their marked keys agree.
Key canonical_key_marked(const MaskGraph& g, int marked);

}  // namespace canon

// graph6 of the canonically relabeled graph; equal strings certify
// isomorphism. Requires n <= canon::kMaxVertices.
std::string canonical_graph6(const Graph& g);
std::vector<int> canonical_labeling(const Graph& g);  // vertex -> position
Graph relabeled(const Graph& g, const std::vector<int>& position_of);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace tribook

#endif  // TRIBOOK_CANONICAL_HPP
