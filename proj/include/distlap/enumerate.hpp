#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "distlap/graph.hpp"

namespace distlap {

inline constexpr int kMaxTreeOrder = 20;
inline constexpr int kDefaultGraphCap = 7;
inline constexpr int kHardGraphCap = 8;

struct TreeClassQuery {
  int n = 0;
  std::optional<int> k;  // pendant count filter
  std::size_t cap = std::numeric_limits<std::size_t>::max();
};

struct GraphClassQuery {
  int n = 0;
  int k = 0;
  int cap = kDefaultGraphCap;  // raise to kHardGraphCap explicitly for n = 8
};

/// One tree per isomorphism class, generated from canonical level sequences
/// in constant amortized time per tree. Deterministic order.
class FreeTreeStream {
 public:
  explicit FreeTreeStream(int n);
  std::optional<Graph> next();

  /// Current level sequence (depths in preorder, root first).
  const std::vector<int>& levels() const noexcept { return layout_; }

 private:
  bool next_rooted(int p);
  void advance_to_free();

  int n_;
  std::vector<int> layout_;
  bool done_ = false;
  bool started_ = false;
};

/// Free trees with an optional pendant-count filter and a yield cap.
class TreeClassStream {
 public:
  explicit TreeClassStream(const TreeClassQuery& q);
  std::optional<Graph> next();

 private:
  TreeClassQuery query_;
  FreeTreeStream trees_;
  std::size_t yielded_ = 0;
};

/// Labeled connected graphs on n vertices with exactly k pendant vertices,
/// in increasing order of their edge bitmask (graph6 bit order).
class ConnectedGraphStream {
 public:
  explicit ConnectedGraphStream(const GraphClassQuery& q);
  std::optional<Graph> next();

 private:
  int n_;
  int k_;
  int pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
  std::vector<std::pair<int, int>> pair_of_bit_;
};

void check_tree_query(const TreeClassQuery& q);
void check_graph_query(const GraphClassQuery& q);

Graph tree_from_levels(const std::vector<int>& levels);

std::vector<Graph> free_trees(int n);
std::vector<Graph> trees_with_k_leaves(const TreeClassQuery& q);
std::vector<Graph> connected_graphs_with_k_pendants(const GraphClassQuery& q);

/// Labeled connected graphs on n vertices, any pendant count.
std::vector<Graph> connected_labeled_graphs(int n);

/// Brute-force canonical relabeling over degree-preserving permutations.
/// Intended for the small desk corpus only; throws OutOfRange above n = 9.
Graph canonical_small_graph(const Graph& g);

/// One representative per isomorphism class of connected graphs on n <= 7
/// vertices, each in canonical labeling, sorted by graph6.
std::vector<Graph> connected_graph_classes(int n);

/// Equal keys imply isomorphic graphs. Trees use the AHU form; graphs up to
/// order 9 use the brute-force canonical labeling; larger non-trees fall back
/// to their labeled graph6 string.
std::string isomorphism_key(const Graph& g);

}  // namespace distlap
