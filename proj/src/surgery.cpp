#include "tribook/surgery.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "tribook/bipartite.hpp"
#include "tribook/canonical.hpp"

namespace tribook {

namespace {

enum Side : int { kA = 0, kB = 1, kC = 2 };

std::vector<int> side_of(const Graph& g, const TriPartition& p) {
  std::vector<int> side(static_cast<size_t>(g.vertex_count()), -1);
  auto place = [&](const std::vector<int>& set, int label) {
    for (int v : set) {
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("tripartition: vertex " + std::to_string(v) +
                                    " out of range");
      if (side[static_cast<size_t>(v)] != -1)
        throw std::invalid_argument("tripartition: vertex " + std::to_string(v) +
                                    " appears twice");
      side[static_cast<size_t>(v)] = label;
    }
  };
  place(p.a, kA);
  place(p.b, kB);
  place(p.c, kC);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (side[static_cast<size_t>(v)] == -1)
      throw std::invalid_argument("tripartition: vertex " + std::to_string(v) + " unassigned");
  return side;
}

struct SideDegrees {
  long long a = 0, b = 0, c = 0;
  long long ab() const { return a + b; }
};

SideDegrees side_degrees(const Graph& g, const std::vector<int>& side, int v) {
  SideDegrees d;
  for (int w : g.neighbors(v)) {
    switch (side[static_cast<size_t>(w)]) {
      case kA: ++d.a; break;
      case kB: ++d.b; break;
      default: ++d.c; break;
    }
  }
  return d;
}

}  // namespace

TriPartition TriPartition::of(const Graph& g, std::vector<int> a, std::vector<int> b,
                              std::vector<int> c) {
  TriPartition p;
  p.a = std::move(a);
  p.b = std::move(b);
  p.c = std::move(c);
  std::sort(p.a.begin(), p.a.end());
  std::sort(p.b.begin(), p.b.end());
  std::sort(p.c.begin(), p.c.end());
  side_of(g, p);  // validates
  return p;
}

bool TriPartition::proper(const Graph& g) const {
  return induces_bipartite_with_sides(g, a, b);
}

TriangleTypes classify_triangles(const Graph& g, const TriPartition& p) {
  const std::vector<int> side = side_of(g, p);
  const int n = g.vertex_count();
  TriangleTypes t;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      const auto& nu = g.neighbors(u);
      const auto& nv = g.neighbors(v);
      auto iu = std::upper_bound(nu.begin(), nu.end(), v);
      auto iv = std::upper_bound(nv.begin(), nv.end(), v);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          const int w = *iu;
          const int in_c = (side[static_cast<size_t>(u)] == kC) +
                           (side[static_cast<size_t>(v)] == kC) +
                           (side[static_cast<size_t>(w)] == kC);
          switch (in_c) {
            case 0: ++t.t0; break;
            case 1: ++t.t1; break;
            case 2: ++t.t2; break;
            default: ++t.t3; break;
          }
          ++iu;
          ++iv;
        }
      }
    }
  }
  return t;
}

Rational bar_b(const Graph& g, const TriPartition& p) {
  std::vector<int> ab = p.a;
  ab.insert(ab.end(), p.b.begin(), p.b.end());
  const long long cross = g.cross_edges(ab, p.c);
  if (cross == 0) throw std::domain_error("bar_b: no edges between A ∪ B and C");
  return Rational(2 * classify_triangles(g, p).t_prime(), cross);
}

long long tilde_t_doubled(const Graph& g, const TriPartition& p) {
  const std::vector<int> side = side_of(g, p);
  const long long c_size = static_cast<long long>(p.c.size());
  long long cross = 0;
  long long c_terms = 0;
  long long ab_terms = 0;
  for (int v : p.c) {
    const SideDegrees d = side_degrees(g, side, v);
    cross += d.ab();
    c_terms += 2 * d.a * d.b + d.c * d.ab();
  }
  for (int u : p.a) {
    const long long dc = side_degrees(g, side, u).c;
    ab_terms += dc * dc;
  }
  for (int u : p.b) {
    const long long dc = side_degrees(g, side, u).c;
    ab_terms += dc * dc;
  }
  return -c_size * cross + c_terms + ab_terms;
}

Rational tilde_t(const Graph& g, const TriPartition& p) {
  return Rational(tilde_t_doubled(g, p), 2);
}

SurgeryReport partition_report(const Graph& g, const TriPartition& p) {
  const std::vector<int> side = side_of(g, p);
  SurgeryReport r;
  r.t_by_type = classify_triangles(g, p);
  r.t_prime = r.t_by_type.t_prime();
  r.tilde_t_doubled = tilde_t_doubled(g, p);
  bool first = true;
  for (int v : p.c) {
    const SideDegrees d = side_degrees(g, side, v);
    const long long hi = std::max(d.a, d.b);
    const long long lo = std::min(d.a, d.b);
    if (first) {
      r.d_max = hi;
      r.d_min = lo;
      first = false;
    } else {
      r.d_max = std::max(r.d_max, hi);
      r.d_min = std::min(r.d_min, lo);
    }
  }
  std::vector<int> ab = p.a;
  ab.insert(ab.end(), p.b.begin(), p.b.end());
  if (g.cross_edges(ab, p.c) > 0) {
    r.bar_b_defined = true;
    r.bar_b_value = bar_b(g, p);
  }
  return r;
}

SurgeryOutcome to_g1(const Graph& g, const TriPartition& p, long long b_cap) {
  (void)b_cap;  // the deletion loop is degree-directed; the cap is reported, not forced
  const std::vector<int> side = side_of(g, p);
  if (!p.proper(g))
    throw std::invalid_argument("to_g1: partition is not proper (A or B has an inside edge)");

  SurgeryOutcome out{g, {}};
  Graph& work = out.graph;
  auto& moves = out.report.moves;

  // Complete A to B.
  for (int u : p.a) {
    for (int v : p.b) {
      if (work.has_edge(u, v)) continue;
      work.add_edge(u, v);
      moves.push_back({SurgeryMove::Kind::add_ab, u, v});
      ++out.report.s;
    }
  }

  // Pay the same number of edges back out of E(A ∪ B, C), always at a
  // C-vertex of largest degree toward A or B.
  for (long long paid = 0; paid < out.report.s; ++paid) {
    int best_v = -1;
    long long best_degree = -1;
    bool best_side_a = true;
    for (int v : p.c) {
      const SideDegrees d = side_degrees(work, side, v);
      const long long hi = std::max(d.a, d.b);
      if (hi > best_degree) {
        best_degree = hi;
        best_v = v;
        best_side_a = d.a >= d.b;
      }
    }
    if (best_v == -1 || best_degree == 0)
      throw InfeasibleError("to_g1: no E(A ∪ B, C) edges left; still owe " +
                            std::to_string(out.report.s - paid) + " deletions");
    const int want = best_side_a ? kA : kB;
    int neighbor = -1;
    for (int w : work.neighbors(best_v)) {
      if (side[static_cast<size_t>(w)] == want) {
        neighbor = w;
        break;
      }
    }
    work.remove_edge(neighbor, best_v);
    moves.push_back({SurgeryMove::Kind::delete_cross, neighbor, best_v});
  }

  const SurgeryReport stats = partition_report(work, p);
  out.report.d_max = stats.d_max;
  out.report.d_min = stats.d_min;
  out.report.t_by_type = stats.t_by_type;
  out.report.t_prime = stats.t_prime;
  out.report.bar_b_defined = stats.bar_b_defined;
  out.report.bar_b_value = stats.bar_b_value;
  out.report.tilde_t_doubled = stats.tilde_t_doubled;
  return out;
}

SurgeryOutcome to_g2(const Graph& g1, const TriPartition& p, long long b_cap) {
  const std::vector<int> side = side_of(g1, p);
  if (b_cap < 0) throw std::invalid_argument("to_g2: negative b_cap");
  for (int v : p.c) {
    const SideDegrees d = side_degrees(g1, side, v);
    if (d.a > b_cap || d.b > b_cap)
      throw InfeasibleError("to_g2: vertex " + std::to_string(v) +
                            " already exceeds b_cap toward A or B");
  }

  SurgeryOutcome out{g1, {}};
  Graph& work = out.graph;
  auto& moves = out.report.moves;

  auto total_deficit = [&]() {
    long long deficit = 0;
    for (int v : p.c) {
      const SideDegrees d = side_degrees(work, side, v);
      deficit += (b_cap - d.a) + (b_cap - d.b);
    }
    return deficit;
  };

  for (long long deficit = total_deficit(); deficit > 0; --deficit) {
    // Delete one C-edge at the busiest C-vertex.
    int del_v = -1;
    long long del_degree = 0;
    for (int v : p.c) {
      const long long dc = side_degrees(work, side, v).c;
      if (dc > del_degree) {
        del_degree = dc;
        del_v = v;
      }
    }
    if (del_v == -1)
      throw InfeasibleError("to_g2: no C-internal edges left; still owe " +
                            std::to_string(deficit) + " additions");
    int del_w = -1;
    long long del_w_degree = -1;
    for (int w : work.neighbors(del_v)) {
      if (side[static_cast<size_t>(w)] != kC) continue;
      const long long dc = side_degrees(work, side, w).c;
      if (dc > del_w_degree) {
        del_w_degree = dc;
        del_w = w;
      }
    }
    work.remove_edge(del_v, del_w);
    moves.push_back({SurgeryMove::Kind::delete_c, del_v, del_w});
    ++out.report.moved_c_edges;

    // Add one cross edge at the most deficient C-vertex.
    int add_v = -1;
    long long add_deficit = 0;
    bool add_side_a = true;
    for (int v : p.c) {
      const SideDegrees d = side_degrees(work, side, v);
      const long long need = (b_cap - d.a) + (b_cap - d.b);
      if (need > add_deficit) {
        add_deficit = need;
        add_v = v;
        add_side_a = (b_cap - d.a) >= (b_cap - d.b);
      }
    }
    const std::vector<int>& pool = add_side_a ? p.a : p.b;
    int add_u = -1;
    for (int u : pool) {
      if (!work.has_edge(u, add_v)) {
        add_u = u;
        break;
      }
    }
    if (add_u == -1)
      throw InfeasibleError("to_g2: vertex " + std::to_string(add_v) +
                            " has no free slot on its deficient side (b_cap exceeds |A| or |B|)");
    work.add_edge(add_u, add_v);
    moves.push_back({SurgeryMove::Kind::add_cross, add_u, add_v});
  }

  const SurgeryReport stats = partition_report(work, p);
  out.report.d_max = stats.d_max;
  out.report.d_min = stats.d_min;
  out.report.t_by_type = stats.t_by_type;
  out.report.t_prime = stats.t_prime;
  out.report.bar_b_defined = stats.bar_b_defined;
  out.report.bar_b_value = stats.bar_b_value;
  out.report.tilde_t_doubled = stats.tilde_t_doubled;
  return out;
}

long long delta2_delete_c_edge(const Graph& g, const TriPartition& p, int v, int w) {
  const std::vector<int> side = side_of(g, p);
  if (side[static_cast<size_t>(v)] != kC || side[static_cast<size_t>(w)] != kC)
    throw std::invalid_argument("delta2_delete_c_edge: both endpoints must be in C");
  if (!g.has_edge(v, w)) throw std::invalid_argument("delta2_delete_c_edge: not an edge");
  return -(side_degrees(g, side, v).ab() + side_degrees(g, side, w).ab());
}

long long delta2_add_cross_edge(const Graph& g, const TriPartition& p, int u, int v) {
  const std::vector<int> side = side_of(g, p);
  if (side[static_cast<size_t>(v)] != kC)
    throw std::invalid_argument("delta2_add_cross_edge: v must be in C");
  const int u_side = side[static_cast<size_t>(u)];
  if (u_side == kC) throw std::invalid_argument("delta2_add_cross_edge: u must be in A ∪ B");
  if (g.has_edge(u, v)) throw std::invalid_argument("delta2_add_cross_edge: already an edge");
  const SideDegrees dv = side_degrees(g, side, v);
  const SideDegrees du = side_degrees(g, side, u);
  const long long other = u_side == kA ? dv.b : dv.a;
  return -static_cast<long long>(p.c.size()) + 2 * other + dv.c + 2 * du.c + 1;
}

TriPartition max_induced_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16)
    throw std::invalid_argument("max_induced_bipartite: exact search is limited to n <= 16");

  canon::MaskGraph mask = canon::to_mask(g);
  uint32_t best_a = 0, best_b = 0;
  int best_size = -1;
  bool used_a_yet = false;

  // Assign vertices in label order to A, B or C; A before B before C, so
  // the first optimum found is the lexicographically smallest assignment.
  auto dfs = [&](auto&& self, int v, uint32_t in_a, uint32_t in_b, int kept,
                 bool a_used) -> void {
    if (kept + (n - v) <= best_size) return;
    if (v == n) {
      if (kept > best_size) {
        best_size = kept;
        best_a = in_a;
        best_b = in_b;
      }
      return;
    }
    const uint32_t adj = mask.adj[static_cast<size_t>(v)];
    if ((adj & in_a) == 0) self(self, v + 1, in_a | (1u << v), in_b, kept + 1, true);
    // Skipping B until A is nonempty halves the A/B-swap symmetry.
    if (a_used && (adj & in_b) == 0) self(self, v + 1, in_a, in_b | (1u << v), kept + 1, a_used);
    self(self, v + 1, in_a, in_b, kept, a_used);
  };
  (void)used_a_yet;
  dfs(dfs, 0, 0, 0, 0, false);

  std::vector<int> a, b, c;
  for (int v = 0; v < n; ++v) {
    if ((best_a >> v) & 1u)
      a.push_back(v);
    else if ((best_b >> v) & 1u)
      b.push_back(v);
    else
      c.push_back(v);
  }
  return TriPartition::of(g, std::move(a), std::move(b), std::move(c));
}

}  // namespace tribook
