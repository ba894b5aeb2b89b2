#ifndef TRIBOOK_GRAPH_HPP
#define TRIBOOK_GRAPH_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace tribook {

// Simple undirected graph on labeled vertices 0..n-1. Adjacency rows are
// sorted vectors; mutations keep the rows symmetric and loop-free. Values
// are cheap to copy at the sizes this library works with and are safe to
// share across threads once construction is done.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  // Parses {"n": int, "edges": [[u, v], ...]}.
  static Graph from_json_text(std::string_view text);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return m_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  // |N(u) ∩ N(v)| for distinct vertices u, v.
  int codegree(int u, int v) const;

  // e(X): edges with both endpoints in xs.
  long long edges_within(std::span<const int> xs) const;
  // e(X, Y) for disjoint xs, ys; throws if the sets overlap.
  long long cross_edges(std::span<const int> xs, std::span<const int> ys) const;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  long long m_ = 0;
};

}  // namespace tribook

#endif  // TRIBOOK_GRAPH_HPP
