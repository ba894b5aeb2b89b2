#include "tribook/census.hpp"

#include <algorithm>

namespace tribook {

namespace {

// Common neighbors of adjacent u < v that are themselves > v; summing this
// over edges counts every triangle exactly once, at its two smallest
// vertices.
long long forward_codegree(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  auto ia = std::upper_bound(a.begin(), a.end(), v);
  auto ib = std::upper_bound(b.begin(), b.end(), v);
  long long count = 0;
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

long long triangle_count(const Graph& g) {
  long long t = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) t += forward_codegree(g, u, v);
  return t;
}

long long book_number(const Graph& g) {
  long long best = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) best = std::max<long long>(best, g.codegree(u, v));
  return best;
}

BookProfile book_profile(const Graph& g) {
  BookProfile p;
  long long codegree_sum = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    const long long d = g.degree(u);
    p.degree_square_sum += d * d;
    for (int v : g.neighbors(u)) {
      if (u >= v) continue;
      const long long c = g.codegree(u, v);
      p.per_edge[{u, v}] = c;
      p.book_number = std::max(p.book_number, c);
      codegree_sum += c;
    }
  }
  p.triangle_count = codegree_sum / 3;  // each triangle counted once per edge
  return p;
}

BnCheck bn_inequality_check(const Graph& g) {
  const long long n = g.vertex_count();
  const long long m = g.edge_count();
  long long book = 0;
  long long codegree_sum = 0;
  long long degree_square_sum = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    const long long d = g.degree(u);
    degree_square_sum += d * d;
    for (int v : g.neighbors(u)) {
      if (u >= v) continue;
      const long long c = g.codegree(u, v);
      book = std::max(book, c);
      codegree_sum += c;
    }
  }
  const long long t = codegree_sum / 3;
  BnCheck r;
  r.lhs = (6 * book - n) * t;
  r.rhs = book * (degree_square_sum - n * m);
  r.holds = r.lhs >= r.rhs;
  return r;
}

namespace {

bool above_mantel(const Graph& g) {
  const long long n = g.vertex_count();
  return g.edge_count() >= n * n / 4 + 1;
}

}  // namespace

BoundCheck rademacher_check(const Graph& g) {
  if (!above_mantel(g)) return BoundCheck::not_applicable;
  return triangle_count(g) >= g.vertex_count() / 2 ? BoundCheck::holds : BoundCheck::fails;
}

BoundCheck edwards_check(const Graph& g) {
  if (!above_mantel(g)) return BoundCheck::not_applicable;
  return 6 * book_number(g) >= g.vertex_count() ? BoundCheck::holds : BoundCheck::fails;
}

bool is_balanced_complete_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return g.edge_count() == 0;
  // 2-color greedily; complete bipartite with side sizes ⌊n/2⌋, ⌈n/2⌉ is
  // then equivalent to the edge count matching the product of the sides.
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::vector<int> stack;
  int sides[2] = {0, 0};
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<size_t>(start)] != -1) continue;
    color[static_cast<size_t>(start)] = 0;
    ++sides[0];
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          ++sides[color[static_cast<size_t>(w)]];
          stack.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          return false;  // odd cycle
        }
      }
    }
  }
  if (std::min(sides[0], sides[1]) != n / 2) return false;
  return g.edge_count() == static_cast<long long>(sides[0]) * sides[1];
}

}  // namespace tribook
