#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "distlap/families.hpp"
#include "distlap/graph.hpp"

namespace distlap {

enum class GraphFormat { EdgeList, Graph6, Auto };

/// "n m" on the first line, then m lines "u v" (0-indexed). Throws ParseError
/// naming the offending line.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// Reads a whole file ("-" for the given stdin stream). Auto picks edgelist
/// when the first line contains whitespace, graph6 otherwise.
Graph read_graph(const std::string& path, GraphFormat format, std::istream& stdin_stream);
Graph parse_graph_text(std::string_view text, GraphFormat format);

struct FamilySpec {
  Graph graph;
  std::optional<TripleStarPathParams> triple;  // set for triplestar specs
};

/// "path:n", "star:n", "broom:n,k,t1,t2", "triplestar:ell,i,s1,si,sl",
/// "attach:FILE,u,p,q". Throws ParseError or the constructor's error.
FamilySpec parse_family_spec(std::string_view spec, std::istream& stdin_stream);

}  // namespace distlap
