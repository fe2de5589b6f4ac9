#include "distlap/graph6.hpp"

#include <vector>

namespace distlap {

namespace {

constexpr int kSmallLimit = 62;
constexpr int kMediumLimit = 258047;

Error parse_error(std::size_t offset, const std::string& why) {
  return Error(Errc::ParseError, "graph6 byte " + std::to_string(offset) + ": " + why);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kSmallLimit) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kMediumLimit) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw Error(Errc::OutOfRange, "graph6 encoding supports n <= 258047");
  }
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw parse_error(0, "empty record");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw parse_error(i, "byte value " + std::to_string(c) + " outside 63..126");
  }
  std::size_t pos = 0;
  long n = static_cast<unsigned char>(text[0]) - 63;
  pos = 1;
  if (n == 63) {
    if (text.size() >= 2 && text[1] == 126) throw parse_error(1, "orders above 258047 are not supported");
    if (text.size() < 4) throw parse_error(text.size(), "truncated size field");
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (static_cast<unsigned char>(text[i]) - 63);
    pos = 4;
  }
  if (n < 1) throw parse_error(0, "graph must have at least one vertex");
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) {
    throw parse_error(std::min(text.size(), pos + byte_count),
                      "expected " + std::to_string(byte_count) + " adjacency bytes, found " +
                          std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(text[pos + bit / 6]) - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bit_count % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    const int pad_bits = static_cast<int>(6 - bit_count % 6);
    if (last & ((1 << pad_bits) - 1)) throw parse_error(text.size() - 1, "non-zero padding bits");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

}  // namespace distlap
