#pragma once

#include <string>
#include <string_view>

#include "distlap/graph.hpp"

namespace distlap {

/// graph6 encoding: size prefix (63 + n for n <= 62, otherwise 126 followed by
/// three 6-bit groups), then the upper triangle in column order (j from 1,
/// i from 0 to j-1), packed big-endian six bits per byte, each byte + 63.
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 record (no trailing newline). Throws ParseError with the
/// offending byte offset, or Disconnected.
Graph graph6_decode(std::string_view text);

}  // namespace distlap
