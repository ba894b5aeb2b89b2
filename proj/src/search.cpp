#include "tribook/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "tribook/canonical.hpp"
#include "tribook/census.hpp"
#include "tribook/constructions.hpp"
#include "tribook/graph6.hpp"

namespace tribook {

long long edge_threshold(int n, EdgeThresholdMode mode) {
  const long long nn = static_cast<long long>(n) * n;
  return mode == EdgeThresholdMode::floor_quarter ? nn / 4 : (nn + 3) / 4;
}

bool in_conjecture_range(int n, int b) { return 6 * b >= n && 4 * b < n; }

namespace {

constexpr int kEnumGuard = 10;   // soft limit, overridable
constexpr int kEnumHard = 15;    // subset masks and canonizer both comfortable
constexpr int kSplitDepth = 6;   // subtree roots for the worker pool

struct EnumSpec {
  int n = 1;
  long long edge_min = 0;
  int b_cap = 0;
  bool exclude_balanced_bipartite = false;
};

EnumSpec resolve(const SearchParams& p) {
  if (p.n < 1) throw std::invalid_argument("search: n must be >= 1");
  if (p.b_cap < 0) throw std::invalid_argument("search: b_cap must be >= 0");
  EnumSpec s;
  s.n = p.n;
  s.edge_min = edge_threshold(p.n, p.edge_threshold_mode);
  s.b_cap = p.b_cap;
  s.exclude_balanced_bipartite = p.exclude_balanced_bipartite;
  return s;
}

void check_guard(const SearchParams& p) {
  if (p.n > kEnumHard)
    throw std::invalid_argument("enumerate: n > " + std::to_string(kEnumHard) +
                                " is not supported");
  if (p.n > kEnumGuard && !p.allow_large) {
    const int bits = p.n * (p.n - 1) / 2;
    char estimate[32];
    std::snprintf(estimate, sizeof estimate, "%.1e", std::pow(2.0, bits));
    throw std::invalid_argument(
        "enumerate: exhaustive search at n = " + std::to_string(p.n) + " refused (2^" +
        std::to_string(bits) + " = " + estimate +
        " labeled graphs); pass allow_large / --force to override");
  }
}

// Maximum number of edges the vertices from..n-1 can still contribute.
long long future_budget(int from, int n) {
  long long total = 0;
  for (int j = from; j < n; ++j) total += j;
  return total;
}

struct UnionFind {
  std::array<int, canon::kMaxVertices> parent{};
  explicit UnionFind(int n) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// Expands one parent by every vertex augmentation that can still meet the
// filters, and hands each isomorph-free child to sink. Acceptance rule:
// the new vertex must be automorphic to the child's canonical deletion
// vertex, and each child class is emitted at most once per parent.
template <typename Sink>
void children_of(const canon::MaskGraph& g, const EnumSpec& spec, Sink&& sink) {
  const int k = g.n;
  const long long parent_edges = g.edge_count();
  const long long future = future_budget(k + 1, spec.n);

  // Codegrees of existing edges; adding a vertex adjacent to both ends
  // pushes them up, and they never come back down.
  std::array<std::array<int, canon::kMaxVertices>, canon::kMaxVertices> cod{};
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v)
      if (g.has_edge(u, v))
        cod[static_cast<size_t>(u)][static_cast<size_t>(v)] =
            std::popcount(g.adj[static_cast<size_t>(u)] & g.adj[static_cast<size_t>(v)]);

  std::set<canon::Key> accepted;
  for (uint32_t subset = 0; subset < (1u << k); ++subset) {
    const int added = std::popcount(subset);
    if (parent_edges + added + future < spec.edge_min) continue;

    bool ok = true;
    for (uint32_t rest = subset; rest && ok;) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      // New edge (u, new vertex): codegree is |N(u) ∩ subset|.
      if (std::popcount(g.adj[static_cast<size_t>(u)] & subset) > spec.b_cap) {
        ok = false;
        break;
      }
      for (uint32_t rest2 = rest; rest2;) {
        const int v = std::countr_zero(rest2);
        rest2 &= rest2 - 1;
        if (g.has_edge(u, v) &&
            cod[static_cast<size_t>(u)][static_cast<size_t>(v)] + 1 > spec.b_cap) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    canon::MaskGraph child = g;
    child.n = k + 1;
    for (uint32_t rest = subset; rest;) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      child.add_edge(u, k);
    }

    auto canon_result = canon::canonize(child);
    if (accepted.contains(canon_result.key)) continue;

    // Canonical deletion vertex: the one in the last canonical position.
    int delta = -1;
    for (int v = 0; v <= k; ++v)
      if (canon_result.position_of[static_cast<size_t>(v)] == k) {
        delta = v;
        break;
      }

    bool is_canonical_parent = (delta == k);
    if (!is_canonical_parent && !canon_result.automorphisms.empty()) {
      UnionFind uf(k + 1);
      for (const auto& sigma : canon_result.automorphisms)
        for (int v = 0; v <= k; ++v) uf.unite(v, sigma[static_cast<size_t>(v)]);
      is_canonical_parent = uf.find(delta) == uf.find(k);
    }
    if (!is_canonical_parent)
      is_canonical_parent =
          canon::canonical_key_marked(child, k) == canon::canonical_key_marked(child, delta);
    if (!is_canonical_parent) continue;

    accepted.insert(std::move(canon_result.key));
    sink(child);
  }
}

bool passes_final_filters(const canon::MaskGraph& g, const EnumSpec& spec) {
  if (g.edge_count() < spec.edge_min) return false;
  if (spec.exclude_balanced_bipartite && is_balanced_complete_bipartite(canon::to_graph(g)))
    return false;
  return true;
}

template <typename Visit>
void expand_depth_first(const canon::MaskGraph& g, const EnumSpec& spec, Visit&& visit) {
  if (g.n == spec.n) {
    if (passes_final_filters(g, spec)) visit(g);
    return;
  }
  children_of(g, spec, [&](const canon::MaskGraph& child) {
    expand_depth_first(child, spec, visit);
  });
}

// Subtree roots at a fixed depth, generated sequentially; the parallel
// phase expands the subtrees. The split depth does not depend on the
// worker count, and results are merged in root order, so output is
// byte-identical for any number of workers.
std::vector<canon::MaskGraph> enumerate_roots(const EnumSpec& spec, int depth) {
  std::vector<canon::MaskGraph> level;
  canon::MaskGraph start;
  start.n = 1;
  level.push_back(start);
  for (int size = 1; size < depth; ++size) {
    std::vector<canon::MaskGraph> next;
    for (const auto& g : level)
      children_of(g, spec, [&](const canon::MaskGraph& child) { next.push_back(child); });
    level = std::move(next);
  }
  return level;
}

template <typename Acc, typename Absorb, typename Merge>
Acc run_enumeration(const EnumSpec& spec, int workers, Absorb&& absorb, Merge&& merge) {
  const int depth = std::min(spec.n, kSplitDepth);
  std::vector<canon::MaskGraph> roots = enumerate_roots(spec, depth);

  Acc total{};
  if (depth == spec.n) {
    for (const auto& g : roots)
      if (passes_final_filters(g, spec)) absorb(total, g);
    return total;
  }

  const int jobs = static_cast<int>(roots.size());
  std::vector<Acc> slot(static_cast<size_t>(jobs));
  if (workers <= 1) {
    for (int i = 0; i < jobs; ++i)
      expand_depth_first(roots[static_cast<size_t>(i)], spec,
                         [&](const canon::MaskGraph& g) { absorb(slot[static_cast<size_t>(i)], g); });
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      try {
        for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1))
          expand_depth_first(roots[static_cast<size_t>(i)], spec, [&](const canon::MaskGraph& g) {
            absorb(slot[static_cast<size_t>(i)], g);
          });
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }
  for (auto& s : slot) merge(total, std::move(s));
  return total;
}

std::string canonical_witness(const canon::MaskGraph& g) {
  return canonical_graph6(canon::to_graph(g));
}

}  // namespace

void enumerate_filtered(const SearchParams& params,
                        const std::function<void(const Graph&)>& yield) {
  check_guard(params);
  const EnumSpec spec = resolve(params);
  struct Nothing {};
  std::mutex yield_mutex;
  run_enumeration<Nothing>(
      spec, params.workers,
      [&](Nothing&, const canon::MaskGraph& g) {
        std::scoped_lock lock(yield_mutex);
        yield(canon::to_graph(g));
      },
      [](Nothing&, Nothing&&) {});
}

namespace {

struct VerifyAcc {
  long long count = 0;
  std::optional<long long> min_t;
  std::set<std::string> witnesses;

  void take(long long t, const canon::MaskGraph& g) {
    ++count;
    if (!min_t || t < *min_t) {
      min_t = t;
      witnesses.clear();
      witnesses.insert(canonical_witness(g));
    } else if (t == *min_t) {
      witnesses.insert(canonical_witness(g));
    }
  }
};

}  // namespace

Certificate verify_conjecture(const SearchParams& params) {
  check_guard(params);
  const EnumSpec spec = resolve(params);

  VerifyAcc result = run_enumeration<VerifyAcc>(
      spec, params.workers,
      [](VerifyAcc& acc, const canon::MaskGraph& g) {
        acc.take(triangle_count(canon::to_graph(g)), g);
      },
      [](VerifyAcc& into, VerifyAcc&& from) {
        into.count += from.count;
        if (!from.min_t) return;
        if (!into.min_t || *from.min_t < *into.min_t) {
          into.min_t = from.min_t;
          into.witnesses = std::move(from.witnesses);
        } else if (*from.min_t == *into.min_t) {
          into.witnesses.merge(from.witnesses);
        }
      });

  Certificate cert;
  cert.kind = "verify";
  cert.params = params;
  cert.graphs_examined = result.count;
  cert.min_triangles_found = result.min_t;
  const long long b = params.b_cap;
  cert.conjectured_bound = b * b * (params.n - 4 * b);
  cert.in_range = in_conjecture_range(params.n, params.b_cap);
  cert.extremal_witnesses.assign(result.witnesses.begin(), result.witnesses.end());
  cert.matches_conjecture =
      cert.in_range && result.min_t && *result.min_t == cert.conjectured_bound;
  if (cert.in_range && 4 * b <= params.n) {
    const std::string s_canon = canonical_graph6(s_graph(b, params.n).graph);
    cert.unique_extremal_is_s_graph =
        result.witnesses.size() == 1 && *result.witnesses.begin() == s_canon;
  }
  SuiteOutcome recensus;
  recensus.graphs_examined = static_cast<long long>(cert.extremal_witnesses.size());
  recensus.pass = certificate_witnesses_consistent(cert);
  cert.suite_results["witness_recensus"] = std::move(recensus);
  return cert;
}

std::map<std::string, SuiteOutcome> classical_suite(int n_max, int workers) {
  if (n_max < 1 || n_max > 8)
    throw std::invalid_argument("classical_suite: n_max must be between 1 and 8");

  struct SuiteAcc {
    long long count = 0;
    std::set<std::string> rademacher_failures;
    std::set<std::string> edwards_failures;
  };

  std::map<std::string, SuiteOutcome> results;
  SuiteOutcome rademacher;
  SuiteOutcome edwards;
  for (int n = 1; n <= n_max; ++n) {
    EnumSpec spec;
    spec.n = n;
    spec.edge_min = static_cast<long long>(n) * n / 4 + 1;
    spec.b_cap = n;  // codegree cannot exceed n - 2: no pruning
    spec.exclude_balanced_bipartite = false;

    SuiteAcc acc = run_enumeration<SuiteAcc>(
        spec, workers,
        [](SuiteAcc& a, const canon::MaskGraph& mg) {
          const Graph g = canon::to_graph(mg);
          ++a.count;
          if (rademacher_check(g) != BoundCheck::holds)
            a.rademacher_failures.insert(canonical_witness(mg));
          if (edwards_check(g) != BoundCheck::holds)
            a.edwards_failures.insert(canonical_witness(mg));
        },
        [](SuiteAcc& into, SuiteAcc&& from) {
          into.count += from.count;
          into.rademacher_failures.merge(from.rademacher_failures);
          into.edwards_failures.merge(from.edwards_failures);
        });

    SuiteOutcome classes;
    classes.graphs_examined = acc.count;
    results["classes_n" + std::to_string(n)] = std::move(classes);
    rademacher.graphs_examined += acc.count;
    edwards.graphs_examined += acc.count;
    for (const auto& w : acc.rademacher_failures) rademacher.witnesses.push_back(w);
    for (const auto& w : acc.edwards_failures) edwards.witnesses.push_back(w);
  }
  rademacher.pass = rademacher.witnesses.empty();
  edwards.pass = edwards.witnesses.empty();
  results["rademacher"] = std::move(rademacher);
  results["edwards"] = std::move(edwards);
  return results;
}

namespace {

// Bounded draw from the engine; engine output is fully specified by the
// standard, so runs are reproducible everywhere.
uint64_t draw_below(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

struct NonEdgePick {
  int u = -1, v = -1;
};

NonEdgePick pick_non_edge(const Graph& g, std::mt19937_64& rng, long long non_edges) {
  long long index = static_cast<long long>(draw_below(rng, static_cast<uint64_t>(non_edges)));
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.has_edge(u, v)) continue;
      if (index-- == 0) return {u, v};
    }
  return {};
}

}  // namespace

Certificate stress_search(const SearchParams& params) {
  if (params.mode != SearchMode::stress)
    throw std::invalid_argument("stress_search: params.mode must be stress");
  if (params.n < 5 || params.b_cap < 1)
    throw std::invalid_argument(
        "stress_search: needs n >= 5 and b_cap >= 1 to seed a feasible start");
  const EnumSpec spec = resolve(params);

  // Start from the prism blow-up with the largest legal b; it meets every
  // constraint (m = ⌊n²/4⌋ >= threshold only in floor mode, so reject the
  // strict threshold on odd n up front).
  const long long start_b = std::min<long long>(params.b_cap, (params.n - 1) / 4);
  Graph current = s_graph(start_b, params.n).graph;
  if (current.edge_count() < spec.edge_min)
    throw std::invalid_argument("stress_search: no feasible start for the strict threshold");

  // The stress constraint set always excludes the balanced complete
  // bipartite graph; otherwise descent would bottom out at the trivial
  // zero-triangle extremal point.
  auto feasible = [&](const Graph& g) {
    if (book_number(g) > params.b_cap) return false;
    if (is_balanced_complete_bipartite(g)) return false;
    return true;
  };
  if (!feasible(current))
    throw std::invalid_argument("stress_search: start graph violates the constraints");

  std::mt19937_64 rng(params.seed);
  long long t_current = triangle_count(current);
  long long best_t = t_current;
  std::set<std::string> witnesses{canonical_graph6(current)};
  constexpr size_t kMaxWitnesses = 16;

  const long long pairs =
      static_cast<long long>(params.n) * (params.n - 1) / 2;
  for (long long iter = 0; iter < params.stress_iterations; ++iter) {
    const auto edges = current.edges();
    if (edges.empty() || pairs == static_cast<long long>(edges.size())) break;
    const auto [eu, ev] =
        edges[static_cast<size_t>(draw_below(rng, static_cast<uint64_t>(edges.size())))];
    const NonEdgePick add =
        pick_non_edge(current, rng, pairs - static_cast<long long>(edges.size()));

    current.remove_edge(eu, ev);
    current.add_edge(add.u, add.v);
    const long long t_new = triangle_count(current);
    if (feasible(current) && t_new <= t_current) {
      t_current = t_new;
      if (t_new < best_t) {
        best_t = t_new;
        witnesses.clear();
        witnesses.insert(canonical_graph6(current));
      } else if (t_new == best_t && witnesses.size() < kMaxWitnesses) {
        witnesses.insert(canonical_graph6(current));
      }
    } else {
      current.remove_edge(add.u, add.v);
      current.add_edge(eu, ev);
    }
  }

  Certificate cert;
  cert.kind = "stress";
  cert.params = params;
  cert.graphs_examined = params.stress_iterations;
  cert.min_triangles_found = best_t;
  const long long b = params.b_cap;
  cert.conjectured_bound = b * b * (params.n - 4 * b);
  cert.in_range = in_conjecture_range(params.n, params.b_cap);
  cert.extremal_witnesses.assign(witnesses.begin(), witnesses.end());
  cert.matches_conjecture = cert.in_range && best_t == cert.conjectured_bound;
  if (cert.in_range && 4 * b <= params.n) {
    const std::string s_canon = canonical_graph6(s_graph(b, params.n).graph);
    cert.unique_extremal_is_s_graph =
        witnesses.size() == 1 && *witnesses.begin() == s_canon;
  }
  SuiteOutcome no_violation;
  no_violation.graphs_examined = params.stress_iterations;
  no_violation.pass = !(cert.in_range && best_t < cert.conjectured_bound);
  cert.suite_results["no_violation_found"] = std::move(no_violation);
  SuiteOutcome recensus;
  recensus.graphs_examined = static_cast<long long>(cert.extremal_witnesses.size());
  recensus.pass = certificate_witnesses_consistent(cert);
  cert.suite_results["witness_recensus"] = std::move(recensus);
  return cert;
}

namespace {

std::string mode_name(EdgeThresholdMode mode) {
  return mode == EdgeThresholdMode::floor_quarter ? "floor_quarter" : "strict_quarter";
}

std::string mode_name(SearchMode mode) {
  return mode == SearchMode::exhaustive ? "exhaustive" : "stress";
}

// Worker count and the guard override are execution configuration, not
// search semantics; leaving them out keeps certificates byte-identical
// across worker counts.
nlohmann::json params_json(const SearchParams& p) {
  return nlohmann::json{
      {"n", p.n},
      {"b_cap", p.b_cap},
      {"edge_threshold_mode", mode_name(p.edge_threshold_mode)},
      {"exclude_balanced_bipartite", p.exclude_balanced_bipartite},
      {"mode", mode_name(p.mode)},
      {"stress_iterations", p.stress_iterations},
      {"seed", p.seed},
  };
}

nlohmann::json suite_json(const std::map<std::string, SuiteOutcome>& suites) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, outcome] : suites) {
    j[name] = nlohmann::json{{"pass", outcome.pass},
                             {"graphs_examined", outcome.graphs_examined},
                             {"witnesses", outcome.witnesses}};
  }
  return j;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  nlohmann::json j{
      {"schema_version", cert.schema_version},
      {"kind", cert.kind},
      {"params", params_json(cert.params)},
      {"graphs_examined", cert.graphs_examined},
      {"conjectured_bound", cert.conjectured_bound},
      {"extremal_witnesses", cert.extremal_witnesses},
      {"in_range", cert.in_range},
      {"matches_conjecture", cert.matches_conjecture},
      {"unique_extremal_is_s_graph", cert.unique_extremal_is_s_graph},
      {"suite_results", suite_json(cert.suite_results)},
  };
  if (cert.min_triangles_found)
    j["min_triangles_found"] = *cert.min_triangles_found;
  else
    j["min_triangles_found"] = nullptr;
  return j.dump(2);
}

bool certificate_witnesses_consistent(const Certificate& cert) {
  const long long edge_min = edge_threshold(cert.params.n, cert.params.edge_threshold_mode);
  for (const auto& line : cert.extremal_witnesses) {
    Graph g;
    try {
      g = decode_graph6(line);
    } catch (const Graph6ParseError&) {
      return false;
    }
    if (g.vertex_count() != cert.params.n) return false;
    if (g.edge_count() < edge_min) return false;
    if (book_number(g) > cert.params.b_cap) return false;
    if (cert.params.exclude_balanced_bipartite && is_balanced_complete_bipartite(g)) return false;
    if (!cert.min_triangles_found || triangle_count(g) != *cert.min_triangles_found) return false;
    if (canonical_graph6(g) != line) return false;
  }
  return true;
}

}  // namespace tribook
