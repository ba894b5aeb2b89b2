#include "tribook/graph6.hpp"

#include <limits>
#include <utility>

namespace tribook {
namespace graph6_detail {

namespace {
constexpr long long kShortMax = 62;
constexpr long long kMediumMax = 258047;        // 2^18 - 1
constexpr long long kLongMax = 68719476735LL;   // 2^36 - 1
}  // namespace

void append_size(std::string& out, long long n) {
  if (n < 0) throw std::invalid_argument("graph6: negative vertex count");
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kMediumMax) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= kLongMax) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: vertex count exceeds format limit");
  }
}

std::pair<long long, std::size_t> parse_size(std::string_view line) {
  auto byte_at = [&](std::size_t i) -> long long {
    if (i >= line.size()) throw Graph6ParseError("graph6: truncated size header", line.size());
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw Graph6ParseError("graph6: byte out of range", i);
    return c - 63;
  };
  const long long first = byte_at(0);
  if (first < 63) return {first, 1};
  if (byte_at(1) < 63) {
    long long n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
    return {n, 4};
  }
  long long n = 0;
  for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte_at(i);
  return {n, 8};
}

}  // namespace graph6_detail

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  graph6_detail::append_size(out, n);
  int bits = 0;
  int value = 0;
  // Upper triangle column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + 63));
        bits = 0;
        value = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
  return out;
}

Graph decode_graph6(std::string_view line) {
  auto [n64, pos] = graph6_detail::parse_size(line);
  if (n64 > graph6_detail::kLongMax || n64 < 0)
    throw Graph6ParseError("graph6: vertex count out of range", 0);
  if (n64 > std::numeric_limits<int>::max())
    throw Graph6ParseError("graph6: graph too large to materialize", 0);
  const int n = static_cast<int>(n64);
  Graph g(n);

  const long long pair_bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t body_bytes = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (line.size() < pos + body_bytes)
    throw Graph6ParseError("graph6: truncated edge data", line.size());
  if (line.size() > pos + body_bytes)
    throw Graph6ParseError("graph6: trailing bytes after edge data", pos + body_bytes);

  long long bit_index = 0;
  int i = 0;
  int j = 1;
  for (std::size_t k = 0; k < body_bytes; ++k) {
    const unsigned char c = static_cast<unsigned char>(line[pos + k]);
    if (c < 63 || c > 126) throw Graph6ParseError("graph6: byte out of range", pos + k);
    const int group = c - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      const int bit = (group >> b) & 1;
      if (bit_index >= pair_bits) {
        if (bit != 0) throw Graph6ParseError("graph6: nonzero padding bits", pos + k);
        continue;
      }
      if (bit) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

}  // namespace tribook
