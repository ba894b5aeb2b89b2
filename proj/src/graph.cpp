#include "tribook/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace tribook {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.resize(static_cast<size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("edge-list JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("edge-list JSON: expected {\"n\":..., \"edges\":[...]}");
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("edge-list JSON: each edge must be [u, v]");
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(vertex_count()) + ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& row = adj_[static_cast<size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("add_edge: loop at vertex " + std::to_string(u));
  auto& ru = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(ru.begin(), ru.end(), v);
  if (it != ru.end() && *it == v) return;  // already present
  ru.insert(it, v);
  auto& rv = adj_[static_cast<size_t>(v)];
  rv.insert(std::lower_bound(rv.begin(), rv.end(), u), u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  auto& ru = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(ru.begin(), ru.end(), v);
  if (it == ru.end() || *it != v) return;  // absent
  ru.erase(it);
  auto& rv = adj_[static_cast<size_t>(v)];
  rv.erase(std::lower_bound(rv.begin(), rv.end(), u));
  --m_;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

int Graph::codegree(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("codegree: vertices must be distinct");
  const auto& a = adj_[static_cast<size_t>(u)];
  const auto& b = adj_[static_cast<size_t>(v)];
  int count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
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

long long Graph::edges_within(std::span<const int> xs) const {
  std::vector<char> in(static_cast<size_t>(vertex_count()), 0);
  for (int v : xs) {
    check_vertex(v);
    in[static_cast<size_t>(v)] = 1;
  }
  long long twice = 0;
  for (int v : xs)
    for (int w : adj_[static_cast<size_t>(v)])
      if (in[static_cast<size_t>(w)]) ++twice;
  return twice / 2;
}

long long Graph::cross_edges(std::span<const int> xs, std::span<const int> ys) const {
  std::vector<char> in_y(static_cast<size_t>(vertex_count()), 0);
  for (int v : ys) {
    check_vertex(v);
    in_y[static_cast<size_t>(v)] = 1;
  }
  for (int v : xs) {
    check_vertex(v);
    if (in_y[static_cast<size_t>(v)])
      throw std::invalid_argument("cross_edges: sets overlap at vertex " + std::to_string(v));
  }
  long long count = 0;
  for (int v : xs)
    for (int w : adj_[static_cast<size_t>(v)])
      if (in_y[static_cast<size_t>(w)]) ++count;
  return count;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

}  // namespace tribook
