#include "tribook/graph6.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using tribook::decode_graph6;
using tribook::encode_graph6;
using tribook::Graph;
using tribook::Graph6ParseError;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("known encodings") {
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(complete(4)) == "C~");
  // C5 bit layout worked out by hand from the published format:
  // 101001 100100 -> 'h', 'c'.
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(encode_graph6(c5) == "Dhc");
}

TEST_CASE("round trip is the identity") {
  CHECK(decode_graph6(encode_graph6(Graph(0))) == Graph(0));
  const Graph k4 = complete(4);
  CHECK(decode_graph6(encode_graph6(k4)) == k4);

  std::mt19937_64 rng(11);
  for (int round = 0; round < 1000; ++round) {
    const int n = static_cast<int>(rng() % 41);
    const Graph g = tribook::oracle::random_graph(n, 1 + static_cast<int>(rng() % 9), rng);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("extended header for n >= 63") {
  std::mt19937_64 rng(13);
  const Graph g = tribook::oracle::random_graph(100, 1, rng);
  const std::string line = encode_graph6(g);
  CHECK(line.size() == 4 + (100 * 99 / 2 + 5) / 6);
  CHECK(line[0] == '~');
  CHECK(decode_graph6(line) == g);
}

TEST_CASE("size header codec covers the three-byte form limit") {
  using tribook::graph6_detail::append_size;
  using tribook::graph6_detail::parse_size;
  for (long long n : {0LL, 1LL, 62LL, 63LL, 100LL, 258047LL}) {
    std::string buffer;
    append_size(buffer, n);
    const auto [decoded, consumed] = parse_size(buffer);
    CHECK(decoded == n);
    CHECK(consumed == buffer.size());
    CHECK(buffer.size() == (n <= 62 ? 1u : 4u));
  }
  std::string big;
  append_size(big, 258048LL);
  CHECK(big.size() == 8);
  CHECK(parse_size(big).first == 258048LL);
}

TEST_CASE("malformed input reports the byte offset") {
  CHECK_THROWS_AS(decode_graph6(""), Graph6ParseError);
  // Truncated body: K4 needs one body byte.
  try {
    decode_graph6("C");
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset() == 1);
  }
  // Byte below the printable range inside the body.
  try {
    decode_graph6(std::string("C") + char(30));
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset() == 1);
  }
  // Nonzero padding: n = 2 has one pair bit, five padding bits.
  try {
    decode_graph6("A!");  // '!' = 33, below 63
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset() == 1);
  }
  try {
    decode_graph6("A\x7f");
    FAIL("expected parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset() == 1);
  }
  // 'A' + '_': '_' - 63 = 32 = 100000: edge bit set, padding zero: valid.
  CHECK(decode_graph6("A_").edge_count() == 1);
  // 'A' + 'o': 'o' - 63 = 48 = 110000: nonzero padding.
  CHECK_THROWS_AS(decode_graph6("Ao"), Graph6ParseError);
  // Trailing garbage.
  CHECK_THROWS_AS(decode_graph6("C~~"), Graph6ParseError);
}
