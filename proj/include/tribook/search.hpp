#ifndef TRIBOOK_SEARCH_HPP
#define TRIBOOK_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tribook/graph.hpp"

namespace tribook {

// m >= ⌊n²/4⌋ versus m >= n²/4 (i.e. >= ⌈n²/4⌉ when n is odd). Both
// thresholds appear in the statements this tool checks; floor_quarter is
// the default.
enum class EdgeThresholdMode { floor_quarter, strict_quarter };

enum class SearchMode { exhaustive, stress };

struct SearchParams {
  int n = 1;
  // Maximum allowed book number. Book numbers are integers, so a real
  // bound b is enforced as ⌊b⌋.
  int b_cap = 0;
  EdgeThresholdMode edge_threshold_mode = EdgeThresholdMode::floor_quarter;
  bool exclude_balanced_bipartite = false;
  SearchMode mode = SearchMode::exhaustive;
  long long stress_iterations = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  // Exhaustive enumeration refuses n > 10 unless this is set.
  bool allow_large = false;
};

long long edge_threshold(int n, EdgeThresholdMode mode);

// True iff n/6 <= b < n/4, compared in integers (6b >= n and 4b < n).
bool in_conjecture_range(int n, int b);

struct SuiteOutcome {
  bool pass = true;
  long long graphs_examined = 0;
  std::vector<std::string> witnesses;  // canonical graph6 of offending graphs
};

// Machine-readable verification record. Witnesses are canonical graph6
// strings, sorted, so identical runs serialize identically.
struct Certificate {
  int schema_version = 1;
  std::string kind;  // "verify" or "stress"
  SearchParams params;
  long long graphs_examined = 0;
  std::optional<long long> min_triangles_found;
  long long conjectured_bound = 0;  // b²(n - 4b)
  std::vector<std::string> extremal_witnesses;
  bool in_range = false;
  bool matches_conjecture = false;
  bool unique_extremal_is_s_graph = false;
  std::map<std::string, SuiteOutcome> suite_results;
};

// Streams exactly one representative per isomorphism class of graphs on
// params.n vertices with m >= edge_threshold and b(G) <= b_cap (and, when
// requested, not the balanced complete bipartite graph). Generation is by
// canonical augmentation: a child produced by attaching a new vertex is
// kept only when the new vertex is automorphic to the canonical deletion
// vertex of the child, with per-parent deduplication of child classes.
// With workers > 1 the callback is serialized but arrival order is
// unspecified.
void enumerate_filtered(const SearchParams& params,
                        const std::function<void(const Graph&)>& yield);

// Exhaustive minimum-triangle verification over the filtered classes. A
// violation of the conjectured bound is reported in the certificate, never
// thrown: falsification is a first-class outcome.
Certificate verify_conjecture(const SearchParams& params);

// For every n <= n_max, checks Rademacher (t >= ⌊n/2⌋) and Edwards
// (6b >= n) on every isomorphism class with m >= ⌊n²/4⌋ + 1. Also records
// per-n class counts under keys "classes_n<k>". n_max <= 8.
std::map<std::string, SuiteOutcome> classical_suite(int n_max, int workers = 1);

// Seeded hill descent on the triangle count over the constraint set, using
// edge swaps that preserve m. Reproducible: the proposal sequence is fully
// determined by params.seed.
Certificate stress_search(const SearchParams& params);

std::string certificate_to_json(const Certificate& cert);

// Re-censuses the certificate's witnesses: each must decode, satisfy the
// parameter filters, and reproduce min_triangles_found exactly.
bool certificate_witnesses_consistent(const Certificate& cert);

}  // namespace tribook

#endif  // TRIBOOK_SEARCH_HPP
