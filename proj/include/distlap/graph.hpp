#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "distlap/error.hpp"

namespace distlap {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple, connected, undirected graph on vertices 0..n-1.
///
/// Instances are validated on construction and immutable afterwards, so they
/// can be shared freely between threads.
class Graph {
 public:
  /// Validates the edge list and builds sorted adjacency lists.
  /// Throws Error with LoopEdge, DuplicateEdge, VertexOutOfRange or
  /// Disconnected.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;
  bool is_tree() const noexcept { return edge_count_ == order() - 1; }
  bool is_complete() const noexcept;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// Exact hop distances and transmissions. dist is row-major n x n.
struct DistanceData {
  int n = 0;
  std::vector<int> dist;
  std::vector<long long> trans;
  long long tr_max = 0;

  int at(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

/// Dense symmetric matrix, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order) : order_(order), entries_(static_cast<std::size_t>(order) * order, 0.0) {}

  int order() const noexcept { return order_; }
  double operator()(int i, int j) const { return entries_[index(i, j)]; }

  // Writes both (i, j) and (j, i) so the matrix can never become asymmetric.
  void set(int i, int j, double value) {
    entries_[index(i, j)] = value;
    entries_[index(j, i)] = value;
  }

  std::span<const double> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * order_, static_cast<std::size_t>(order_)};
  }
  std::span<const double> entries() const noexcept { return entries_; }

  /// y = M x. x and y must both have length order().
  void multiply(std::span<const double> x, std::span<double> y) const;
  double frobenius_norm() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * order_ + j; }

  int order_ = 0;
  std::vector<double> entries_;
};

/// All-pairs BFS.
DistanceData distance_data(const Graph& g);

/// Distance Laplacian Tr(G) - D(G).
SymMatrix build_L(const Graph& g);
SymMatrix build_L(const DistanceData& d);
/// Distance signless Laplacian Tr(G) + D(G).
SymMatrix build_Q(const Graph& g);
SymMatrix build_Q(const DistanceData& d);

/// sum over unordered pairs of d(u,v) (x_u - x_v)^2.
double quadratic_form_L(const Graph& g, std::span<const double> x);
double quadratic_form_L(const DistanceData& d, std::span<const double> x);
/// sum over unordered pairs of d(u,v) (x_u + x_v)^2.
double quadratic_form_Q(const Graph& g, std::span<const double> x);
double quadratic_form_Q(const DistanceData& d, std::span<const double> x);

struct DegreeSummary {
  std::vector<int> degrees;
  std::vector<Vertex> pendants;  // ascending
};

DegreeSummary degrees_and_pendants(const Graph& g);
int pendant_count(const Graph& g);

/// AHU encoding rooted at the centroid; for two centroids the lexicographically
/// smaller encoding is used. Equal strings iff the trees are isomorphic.
/// Throws NotATree.
std::string tree_canonical_form(const Graph& g);

/// Relabels g so that old vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace distlap
