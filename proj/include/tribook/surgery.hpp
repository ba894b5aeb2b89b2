#ifndef TRIBOOK_SURGERY_HPP
#define TRIBOOK_SURGERY_HPP

#include <stdexcept>
#include <vector>

#include "tribook/graph.hpp"
#include "tribook/rational.hpp"

namespace tribook {

// Thrown when a surgery cannot reach its target (not enough edges to move,
// or degree targets out of reach). The message names the shortfall.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Labeled tripartition (A, B, C) of the vertex set. "Proper" means g[A ∪ B]
// is bipartite with sides A and B, i.e. both sides are independent; it is
// checked, never assumed.
struct TriPartition {
  std::vector<int> a, b, c;

  // Validates an exact tripartition: disjoint sets covering 0..n-1.
  static TriPartition of(const Graph& g, std::vector<int> a, std::vector<int> b,
                         std::vector<int> c);
  bool proper(const Graph& g) const;
};

// Triangle counts by type: a triangle has type i when exactly i of its
// vertices lie in C. With a proper partition t0 = 0.
struct TriangleTypes {
  long long t0 = 0, t1 = 0, t2 = 0, t3 = 0;
  long long total() const { return t0 + t1 + t2 + t3; }
  long long t_prime() const { return t1 + t2; }
};
TriangleTypes classify_triangles(const Graph& g, const TriPartition& p);

// Average number of triangles on a random E(A ∪ B, C) edge:
// 2 t' / e(A ∪ B, C). Undefined (throws domain_error) when there are no
// such edges.
Rational bar_b(const Graph& g, const TriPartition& p);

// 2·t̃ per the closed form
//   -|C| e(A∪B,C) + Σ_{v∈C} (2 d_A(v) d_B(v) + d_C(v) d_{A∪B}(v))
//   + Σ_{u∈A∪B} d_C(u)².
// When A is complete to B and both are independent, t̃ lower-bounds the
// type-1/2 triangle count.
long long tilde_t_doubled(const Graph& g, const TriPartition& p);
Rational tilde_t(const Graph& g, const TriPartition& p);

struct SurgeryMove {
  enum class Kind { add_ab, delete_cross, delete_c, add_cross };
  Kind kind;
  int x = -1;  // for cross edges: the A ∪ B endpoint
  int y = -1;  // for cross edges: the C endpoint
};

struct SurgeryReport {
  long long s = 0;              // edges added inside A × B
  long long moved_c_edges = 0;  // C-edges traded for (A ∪ B) × C edges
  long long d_max = 0;          // D = max over v in C of max(d_A, d_B)
  long long d_min = 0;          // min over v in C of min(d_A, d_B)
  TriangleTypes t_by_type;
  long long t_prime = 0;
  bool bar_b_defined = false;
  Rational bar_b_value;
  long long tilde_t_doubled = 0;
  std::vector<SurgeryMove> moves;
};

// Statistics snapshot of (g, p) with no transformation applied.
SurgeryReport partition_report(const Graph& g, const TriPartition& p);

struct SurgeryOutcome {
  Graph graph;
  SurgeryReport report;  // describes the transformation; stats are of graph
};

// Completes A × B by adding the s missing edges, then deletes s edges from
// E(A ∪ B, C), each time from a C-vertex of largest degree to A or B
// (ties: smaller label, A side first), removing the edge to the
// lowest-labeled neighbor on the side realizing that degree. Preserves the
// edge count. Requires a proper partition.
SurgeryOutcome to_g1(const Graph& g, const TriPartition& p, long long b_cap);

// Trades C-internal edges for (A ∪ B) × C edges until every C-vertex has
// degree exactly b_cap into both A and B. Per move: delete the C-edge at
// the C-vertex of largest C-degree (ties: smaller label; then the
// neighbor of largest C-degree, smaller label), then add an edge to the
// C-vertex with the largest degree deficit (ties: smaller label), on its
// more deficient side (A first), to the lowest-labeled non-neighbor.
// Requires d_A(v), d_B(v) <= b_cap for all v in C.
SurgeryOutcome to_g2(const Graph& g1, const TriPartition& p, long long b_cap);

// Exact change of 2·t̃ caused by one move, evaluated on the graph before
// the move. Deleting a C-edge (v, w) contributes -(d_{A∪B}(v) + d_{A∪B}(w));
// adding (u, v) with u in A contributes -|C| + 2 d_B(v) + d_C(v) + 2 d_C(u) + 1
// (d_A in place of d_B for u in B).
long long delta2_delete_c_edge(const Graph& g, const TriPartition& p, int v, int w);
long long delta2_add_cross_edge(const Graph& g, const TriPartition& p, int u, int v);

// Exact maximum induced bipartite subgraph by branch and bound; the rest
// of the vertices become C. Guarded to n <= 16.
TriPartition max_induced_bipartite(const Graph& g);

}  // namespace tribook

#endif  // TRIBOOK_SURGERY_HPP
