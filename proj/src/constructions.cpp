#include "tribook/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace tribook {

long long PrismSpec::total() const {
  long long t = 0;
  for (long long s : part_sizes) {
    if (s < 0) throw std::invalid_argument("PrismSpec: negative part size");
    t += s;
  }
  return t;
}

std::pair<int, int> PrismSpec::part_range(int i) const {
  if (i < 0 || i >= 6) throw std::invalid_argument("PrismSpec: part index out of range");
  long long begin = 0;
  for (int k = 0; k < i; ++k) begin += part_sizes[static_cast<size_t>(k)];
  return {static_cast<int>(begin),
          static_cast<int>(begin + part_sizes[static_cast<size_t>(i)])};
}

Graph prism_blowup(const PrismSpec& spec) {
  const long long n = spec.total();
  Graph g(static_cast<int>(n));
  // Base prism adjacency on part indices: U-triangle {0,1,2}, V-triangle
  // {3,4,5}, matching i -- i+3.
  auto parts_adjacent = [](int a, int b) {
    if (a == b) return false;
    const bool au = a < 3;
    const bool bu = b < 3;
    if (au == bu) return true;       // same triangle
    return (a % 3) == (b % 3);       // matching edge
  };
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      if (!parts_adjacent(a, b)) continue;
      const auto [abeg, aend] = spec.part_range(a);
      const auto [bbeg, bend] = spec.part_range(b);
      for (int u = abeg; u < aend; ++u)
        for (int v = bbeg; v < bend; ++v) g.add_edge(u, v);
    }
  }
  return g;
}

long long prism_expected_triangles(const PrismSpec& spec) {
  const auto& s = spec.part_sizes;
  return s[0] * s[1] * s[2] + s[3] * s[4] * s[5];
}

Graph balanced_bipartite(long long n) {
  if (n < 0) throw std::invalid_argument("balanced_bipartite: negative n");
  Graph g(static_cast<int>(n));
  const int half = static_cast<int>(n / 2);
  for (int u = 0; u < half; ++u)
    for (int v = half; v < n; ++v) g.add_edge(u, v);
  return g;
}

SGraphResult s_graph(long long b, long long n) {
  if (b < 0 || n < 0 || 4 * b > n)
    throw std::invalid_argument("s_graph: need 0 <= 4b <= n");
  const long long rest = n - 4 * b;
  SGraphResult r;
  r.spec.part_sizes = {b, b, rest / 2, b, b, rest - rest / 2};
  r.graph = prism_blowup(r.spec);
  r.expected_edges = n * n / 4;
  r.expected_triangles = b * b * rest;
  // For b = 0 or n = 4b the construction degenerates to the balanced
  // complete bipartite graph, which is triangle-free.
  r.expected_book_number = (b == 0 || rest == 0) ? 0 : std::max(b, (rest + 1) / 2);
  return r;
}

MubayiUpperResult mubayi_upper(long long b, long long n) {
  // n/6 <= b < n/4, in integers; b >= 1 so each V_i can lose a vertex.
  if (b < 1 || 6 * b < n || 4 * b >= n)
    throw std::invalid_argument("mubayi_upper: need max(1, n/6) <= b < n/4");
  const long long rest = n - 4 * b;
  MubayiUpperResult r;
  r.spec.part_sizes = {b + 1, b + 1, rest / 2 + 1, b - 1, b - 1, rest - rest / 2 - 1};
  r.graph = prism_blowup(r.spec);
  r.book_number_cap = b + 1;

  // Delete edges between U1 and U3; each lies in exactly |U2| = b+1
  // triangles, and two such edges sharing a U1 endpoint never share a
  // triangle.
  const auto [u1_beg, u1_end] = r.spec.part_range(0);
  const auto [u3_beg, u3_end] = r.spec.part_range(2);
  (void)u1_end;
  if (n % 2 == 0) {
    r.graph.remove_edge(u1_beg, u3_beg);
    r.graph.remove_edge(u1_beg, u3_beg + 1);
    r.deleted_edges = {{u1_beg, u3_beg}, {u1_beg, u3_beg + 1}};
    r.expected_triangles = b * b * rest + n - 2 * (b + 1);
  } else {
    r.graph.remove_edge(u1_beg, u3_beg);
    r.deleted_edges = {{u1_beg, u3_beg}};
    r.expected_triangles = b * b * rest + n - 2 * b - (b + 1);
  }
  (void)u3_end;
  r.expected_edges = n * n / 4 + 1;
  r.notes =
      "parts after shift: one vertex moved from each V_i to U_i (highest-labeled "
      "vertex removed; any choice is isomorphic); deleted edges share the lowest "
      "U1 vertex and run to the lowest U3 vertices";
  return r;
}

}  // namespace tribook
