#pragma once

#include <span>
#include <vector>

#include "distlap/graph.hpp"

namespace distlap {

/// G = G1 u G2 u G3 glued at the single cut vertex v0, plus the target u in
/// G2 \ {v0} that G3 is moved to. Each part lists its vertices including v0.
struct BranchDecomposition {
  Vertex v0 = 0;
  std::vector<Vertex> g1;
  std::vector<Vertex> g2;
  std::vector<Vertex> g3;
  Vertex u = 0;
};

enum class GraftVariant { LaplacianMinus, SignlessPlus };

struct GraftConditionReport {
  double lhs = 0.0;  // G3 \ {v0} against G1
  double rhs = 0.0;  // G3 \ {v0} against G2
  bool strict = false;
  GraftVariant variant = GraftVariant::LaplacianMinus;
};

/// Throws InvalidDecomposition unless the parts cover V, meet pairwise in
/// exactly {v0}, have at least two vertices each, carry every edge inside a
/// single part, and u lies in G2 \ {v0}.
void validate_decomposition(const Graph& g, const BranchDecomposition& d);

/// Re-attaches the edges between v0 and G3 \ {v0} at u.
Graph move_branch(const Graph& g, const BranchDecomposition& d);

GraftConditionReport graft_condition(const Graph& g, const BranchDecomposition& d, std::span<const double> x,
                                     GraftVariant variant);

/// G_{p,q} -> G_{p-1,q+1}: the far end of the p-path is re-hung below the far
/// end of the q-path. Both paths are listed outwards from u, excluding u.
/// Throws NotPendantPath or WrongOrder (p > q).
Graph shift_pendant_path(const Graph& g, Vertex u, std::span<const Vertex> p_path, std::span<const Vertex> q_path);

/// Throws Loop (as LoopEdge) or AlreadyAdjacent.
Graph add_edge(const Graph& g, Vertex u, Vertex v);

/// Every decomposition of a tree: v0 of degree >= 3, its branches split into
/// three non-empty groups, every u in G2 \ {v0}. Deterministic order.
std::vector<BranchDecomposition> tree_decompositions(const Graph& tree);

}  // namespace distlap
