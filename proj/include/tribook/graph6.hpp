#ifndef TRIBOOK_GRAPH6_HPP
#define TRIBOOK_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "tribook/graph.hpp"

namespace tribook {

// Raised on malformed graph6 input; offset is the byte position of the
// first offending byte.
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6: one printable line per graph, short header for n <= 62 and the
// three-byte extended header up to n = 258047 (the six-byte form is also
// accepted on decode).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view line);

namespace graph6_detail {
void append_size(std::string& out, long long n);
// Returns (n, bytes consumed).
std::pair<long long, std::size_t> parse_size(std::string_view line);
}  // namespace graph6_detail

}  // namespace tribook

#endif  // TRIBOOK_GRAPH6_HPP
