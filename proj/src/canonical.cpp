#include "tribook/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "tribook/graph6.hpp"

namespace tribook {
namespace canon {

long long MaskGraph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n; ++v) twice += std::popcount(adj[static_cast<size_t>(v)]);
  return twice / 2;
}

MaskGraph to_mask(const Graph& g) {
  if (g.vertex_count() > kMaxVertices)
    throw std::invalid_argument("canonize: graph exceeds " + std::to_string(kMaxVertices) +
                                " vertices");
  MaskGraph m;
  m.n = g.vertex_count();
  for (int u = 0; u < m.n; ++u)
    for (int v : g.neighbors(u))
      if (u < v) m.add_edge(u, v);
  return m;
}

Graph to_graph(const MaskGraph& m) {
  Graph g(m.n);
  for (int u = 0; u < m.n; ++u) {
    uint32_t row = m.adj[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
    while (row) {
      const int v = std::countr_zero(row);
      row &= row - 1;
      g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

// Ordered partition in nauty style: lab is a vertex ordering, ptn[i] == 1
// iff positions i and i+1 share a cell.
struct Partition {
  std::array<int, kMaxVertices> lab{};
  std::array<int, kMaxVertices> ptn{};
};

// Equitable refinement: repeatedly split cells by neighbor counts into any
// other cell, ordering subcells by ascending count. Depends only on the
// cell structure, so it commutes with relabeling.
void refine(const MaskGraph& g, Partition& p) {
  const int n = g.n;
  bool changed = true;
  std::array<int, kMaxVertices> counts{};
  while (changed) {
    changed = false;
    for (int s_beg = 0; s_beg < n && !changed;) {
      int s_end = s_beg;
      while (p.ptn[static_cast<size_t>(s_end)] == 1) ++s_end;
      uint32_t smask = 0;
      for (int i = s_beg; i <= s_end; ++i) smask |= 1u << p.lab[static_cast<size_t>(i)];

      for (int t_beg = 0; t_beg < n && !changed;) {
        int t_end = t_beg;
        while (p.ptn[static_cast<size_t>(t_end)] == 1) ++t_end;
        if (t_end > t_beg) {
          bool uniform = true;
          const int first =
              std::popcount(g.adj[static_cast<size_t>(p.lab[static_cast<size_t>(t_beg)])] & smask);
          for (int i = t_beg; i <= t_end; ++i) {
            counts[static_cast<size_t>(i)] = std::popcount(
                g.adj[static_cast<size_t>(p.lab[static_cast<size_t>(i)])] & smask);
            if (counts[static_cast<size_t>(i)] != first) uniform = false;
          }
          if (!uniform) {
            std::stable_sort(p.lab.begin() + t_beg, p.lab.begin() + t_end + 1,
                             [&](int a, int b) {
                               return std::popcount(g.adj[static_cast<size_t>(a)] & smask) <
                                      std::popcount(g.adj[static_cast<size_t>(b)] & smask);
                             });
            for (int i = t_beg; i < t_end; ++i) {
              const int ci = std::popcount(
                  g.adj[static_cast<size_t>(p.lab[static_cast<size_t>(i)])] & smask);
              const int cj = std::popcount(
                  g.adj[static_cast<size_t>(p.lab[static_cast<size_t>(i + 1)])] & smask);
              if (ci != cj) p.ptn[static_cast<size_t>(i)] = 0;
            }
            changed = true;
          }
        }
        t_beg = t_end + 1;
      }
      s_beg = s_end + 1;
    }
  }
}

struct Searcher {
  const MaskGraph& g;
  Key best_key;
  std::array<int, kMaxVertices> best_lab{};
  bool have_best = false;
  std::vector<std::vector<int>> automorphisms;
  static constexpr size_t kMaxAutomorphisms = 64;

  explicit Searcher(const MaskGraph& graph) : g(graph) {}

  // Rows toward smaller positions only, so a discrete prefix of the
  // partition already determines a comparable key prefix.
  uint32_t row_bits(const Partition& p, int i) const {
    uint32_t row = 0;
    const uint32_t adj_i = g.adj[static_cast<size_t>(p.lab[static_cast<size_t>(i)])];
    for (int j = 0; j < i; ++j)
      if ((adj_i >> p.lab[static_cast<size_t>(j)]) & 1u) row |= 1u << j;
    return row;
  }

  void record_automorphism(const Partition& leaf) {
    if (automorphisms.size() >= kMaxAutomorphisms) return;
    std::vector<int> sigma(static_cast<size_t>(g.n));
    bool identity = true;
    for (int i = 0; i < g.n; ++i) {
      sigma[static_cast<size_t>(leaf.lab[static_cast<size_t>(i)])] =
          best_lab[static_cast<size_t>(i)];
      if (leaf.lab[static_cast<size_t>(i)] != best_lab[static_cast<size_t>(i)]) identity = false;
    }
    if (!identity) automorphisms.push_back(std::move(sigma));
  }

  // True if v is reachable from an explored vertex under products of the
  // discovered automorphisms that fix every individualized vertex so far.
  bool in_explored_orbit(uint32_t explored, uint32_t fixed, int v) const {
    if (explored == 0 || automorphisms.empty()) return false;
    uint32_t orbit = explored;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& sigma : automorphisms) {
        bool fixes = true;
        uint32_t f = fixed;
        while (f) {
          const int x = std::countr_zero(f);
          f &= f - 1;
          if (sigma[static_cast<size_t>(x)] != x) {
            fixes = false;
            break;
          }
        }
        if (!fixes) continue;
        uint32_t image = 0;
        uint32_t preimage = 0;
        for (int x = 0; x < g.n; ++x) {
          if ((orbit >> x) & 1u) image |= 1u << sigma[static_cast<size_t>(x)];
          if ((orbit >> sigma[static_cast<size_t>(x)]) & 1u) preimage |= 1u << x;
        }
        const uint32_t next = orbit | image | preimage;
        if (next != orbit) {
          orbit = next;
          grew = true;
        }
      }
      if ((orbit >> v) & 1u) return true;
    }
    return (orbit >> v) & 1u;
  }

  void dfs(Partition p, uint32_t fixed) {
    refine(g, p);
    const int n = g.n;
    int split_pos = n;
    for (int i = 0; i < n;) {
      int end = i;
      while (p.ptn[static_cast<size_t>(end)] == 1) ++end;
      if (end > i) {
        split_pos = i;
        break;
      }
      i = end + 1;
    }

    if (have_best) {
      // Compare the determined prefix against the incumbent.
      const int prefix = split_pos;
      for (int i = 0; i < prefix; ++i) {
        const uint32_t row = row_bits(p, i);
        if (row != best_key[static_cast<size_t>(i)]) {
          if (row > best_key[static_cast<size_t>(i)]) return;  // prune
          break;  // strictly better: keep going, a new best lies below
        }
      }
    }

    if (split_pos == n) {
      Key key(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) key[static_cast<size_t>(i)] = row_bits(p, i);
      if (!have_best || key < best_key) {
        best_key = std::move(key);
        for (int i = 0; i < n; ++i) best_lab[static_cast<size_t>(i)] =
            p.lab[static_cast<size_t>(i)];
        have_best = true;
      } else if (key == best_key) {
        record_automorphism(p);
      }
      return;
    }

    int cell_end = split_pos;
    while (p.ptn[static_cast<size_t>(cell_end)] == 1) ++cell_end;

    uint32_t explored = 0;
    for (int pick = split_pos; pick <= cell_end; ++pick) {
      const int v = p.lab[static_cast<size_t>(pick)];
      if (in_explored_orbit(explored, fixed, v)) continue;
      explored |= 1u << v;

      Partition child = p;
      // Move v to the front of the cell and make it a singleton.
      for (int i = pick; i > split_pos; --i)
        child.lab[static_cast<size_t>(i)] = child.lab[static_cast<size_t>(i - 1)];
      child.lab[static_cast<size_t>(split_pos)] = v;
      child.ptn[static_cast<size_t>(split_pos)] = 0;
      dfs(child, fixed | (1u << v));
    }
  }
};

CanonResult run_canonize(const MaskGraph& g, const std::vector<int>* colors) {
  if (g.n > kMaxVertices) throw std::invalid_argument("canonize: too many vertices");
  CanonResult result;
  if (g.n == 0) return result;

  Partition root;
  for (int i = 0; i < g.n; ++i) root.lab[static_cast<size_t>(i)] = i;
  if (colors) {
    if (static_cast<int>(colors->size()) != g.n)
      throw std::invalid_argument("canonize: color vector size mismatch");
    std::stable_sort(root.lab.begin(), root.lab.begin() + g.n, [&](int a, int b) {
      return (*colors)[static_cast<size_t>(a)] < (*colors)[static_cast<size_t>(b)];
    });
  }
  for (int i = 0; i + 1 < g.n; ++i) {
    const bool same = !colors || (*colors)[static_cast<size_t>(root.lab[static_cast<size_t>(i)])] ==
                                     (*colors)[static_cast<size_t>(root.lab[static_cast<size_t>(i + 1)])];
    root.ptn[static_cast<size_t>(i)] = same ? 1 : 0;
  }
  root.ptn[static_cast<size_t>(g.n - 1)] = 0;

  Searcher searcher(g);
  searcher.dfs(root, 0);

  result.key = std::move(searcher.best_key);
  result.position_of.assign(static_cast<size_t>(g.n), 0);
  for (int i = 0; i < g.n; ++i)
    result.position_of[static_cast<size_t>(searcher.best_lab[static_cast<size_t>(i)])] = i;
  result.automorphisms = std::move(searcher.automorphisms);
  return result;
}

}  // namespace

CanonResult canonize(const MaskGraph& g) { return run_canonize(g, nullptr); }

CanonResult canonize_colored(const MaskGraph& g, const std::vector<int>& colors) {
  return run_canonize(g, &colors);
}

Key canonical_key(const MaskGraph& g) { return canonize(g).key; }

Key canonical_key_marked(const MaskGraph& g, int marked) {
  std::vector<int> colors(static_cast<size_t>(g.n), 1);
  colors[static_cast<size_t>(marked)] = 0;
  return canonize_colored(g, colors).key;
}

}  // namespace canon

std::vector<int> canonical_labeling(const Graph& g) {
  return canon::canonize(canon::to_mask(g)).position_of;
}

Graph relabeled(const Graph& g, const std::vector<int>& position_of) {
  if (static_cast<int>(position_of.size()) != g.vertex_count())
    throw std::invalid_argument("relabeled: labeling size mismatch");
  Graph out(g.vertex_count());
  for (const auto& [u, v] : g.edges())
    out.add_edge(position_of[static_cast<size_t>(u)], position_of[static_cast<size_t>(v)]);
  return out;
}

std::string canonical_graph6(const Graph& g) {
  return encode_graph6(relabeled(g, canonical_labeling(g)));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canon::canonical_key(canon::to_mask(a)) == canon::canonical_key(canon::to_mask(b));
}

}  // namespace tribook
