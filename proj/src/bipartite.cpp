#include "tribook/bipartite.hpp"

#include <algorithm>
#include <stdexcept>

#include "tribook/census.hpp"

namespace tribook {

CutResult lemma1_cut(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("lemma1_cut: empty graph");

  CutResult best;
  for (int x = 0; x < n; ++x) {
    std::vector<char> in_n(static_cast<size_t>(n), 0);
    for (int w : g.neighbors(x)) in_n[static_cast<size_t>(w)] = 1;
    long long interior = 0;
    for (int u = 0; u < n; ++u)
      for (int v : g.neighbors(u))
        if (u < v && in_n[static_cast<size_t>(u)] == in_n[static_cast<size_t>(v)]) ++interior;
    if (best.pivot == -1 || interior < best.deleted_edges) {
      best.pivot = x;
      best.deleted_edges = interior;
    }
  }

  std::vector<char> in_n(static_cast<size_t>(n), 0);
  for (int w : g.neighbors(best.pivot)) in_n[static_cast<size_t>(w)] = 1;
  for (int v = 0; v < n; ++v)
    (in_n[static_cast<size_t>(v)] ? best.side_n : best.side_rest).push_back(v);

  const long long m = g.edge_count();
  const long long t = triangle_count(g);
  best.bound = Rational(m) - Rational(4 * m * m, static_cast<long long>(n) * n) +
               Rational(6 * t, n);
  return best;
}

namespace {

// Prunes xs down to an independent set: repeatedly drop the vertex of
// largest degree inside the set, smallest label on ties.
void prune_to_independent(const Graph& g, std::vector<int>& xs, std::vector<int>& dropped) {
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : xs) in[static_cast<size_t>(v)] = 1;
  auto internal_degree = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v))
      if (in[static_cast<size_t>(w)]) ++d;
    return d;
  };
  for (;;) {
    int worst = -1;
    int worst_degree = 0;
    for (int v : xs) {
      if (!in[static_cast<size_t>(v)]) continue;
      const int d = internal_degree(v);
      if (d > worst_degree) {
        worst_degree = d;
        worst = v;
      }
    }
    if (worst == -1) break;
    in[static_cast<size_t>(worst)] = 0;
    dropped.push_back(worst);
  }
  std::erase_if(xs, [&](int v) { return !in[static_cast<size_t>(v)]; });
}

}  // namespace

ExtractionResult lemma2_extract(const Graph& g, const Rational& c, long long b_cap) {
  if (!(Rational(0) < c && c < Rational(1, 2)))
    throw std::invalid_argument("lemma2_extract: need 0 < c < 1/2");
  if (b_cap < 0) throw std::invalid_argument("lemma2_extract: negative book cap");

  const CutResult cut = lemma1_cut(g);
  ExtractionResult r;
  r.a0 = cut.side_n;
  r.b0 = cut.side_rest;
  r.c = c;
  r.b_cap = b_cap;

  // Degree filter: keep a-vertices with more than (b_cap + |b0|)/2
  // neighbors in b0, and symmetrically. Comparison stays in integers:
  // d > (b_cap + |B|)/2 iff 2d > b_cap + |B|.
  auto filter = [&](const std::vector<int>& from, const std::vector<int>& other,
                    std::vector<int>& into) {
    std::vector<char> in_other(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : other) in_other[static_cast<size_t>(v)] = 1;
    const long long threshold = b_cap + static_cast<long long>(other.size());
    for (int v : from) {
      long long d = 0;
      for (int w : g.neighbors(v))
        if (in_other[static_cast<size_t>(w)]) ++d;
      if (2 * d > threshold) into.push_back(v);
    }
  };
  filter(r.a0, r.b0, r.a);
  filter(r.b0, r.a0, r.b);

  // When b(G) <= b_cap the filtered sides are already independent (an edge
  // inside either would sit in more than b_cap triangles). Otherwise prune
  // so the bipartite postcondition holds regardless.
  std::vector<int> dropped;
  prune_to_independent(g, r.a, dropped);
  prune_to_independent(g, r.b, dropped);

  std::vector<char> kept(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : r.a) kept[static_cast<size_t>(v)] = 1;
  for (int v : r.b) kept[static_cast<size_t>(v)] = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!kept[static_cast<size_t>(v)]) r.removed.push_back(v);

  const long long n = g.vertex_count();
  const long long m = g.edge_count();
  const long long t = triangle_count(g);
  const bool edges_ok = Rational(m) >= Rational(n * n, 4);
  const bool triangles_ok = Rational(t) <= c * c * Rational(n * n * n, 24);
  const bool book_ok = Rational(book_number(g)) <= (Rational(1, 2) - c) * Rational(n);
  r.guarantee_applies = edges_ok && triangles_ok && book_ok;
  r.removed_bound = n == 0 ? Rational(0) : Rational(48 * t) / (c * Rational(n * n));
  return r;
}

bool induces_bipartite_with_sides(const Graph& g, std::span<const int> xs,
                                  std::span<const int> ys) {
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  auto independent = [&](std::span<const int> set) {
    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : set) {
      if (v < 0 || v >= g.vertex_count() || seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = 1;
      in[static_cast<size_t>(v)] = 1;
    }
    for (int v : set)
      for (int w : g.neighbors(v))
        if (in[static_cast<size_t>(w)]) return false;
    return true;
  };
  return independent(xs) && independent(ys);
}

}  // namespace tribook
