#pragma once

#include <optional>
#include <string>

#include "distlap/graph.hpp"

namespace distlap {

/// T(n, k; t1, t2): a path on ell = n - k vertices with t1 pendant edges at
/// one end and t2 at the other. Canonical orientation is t1 <= t2.
struct DoubleBroomParams {
  int n = 0;
  int k = 0;
  int t1 = 0;
  int t2 = 0;
  int ell = 0;

  static DoubleBroomParams make(int n, int k, int t1, int t2) { return {n, k, t1, t2, n - k}; }
  DoubleBroomParams canonical() const;
  friend bool operator==(const DoubleBroomParams&, const DoubleBroomParams&) = default;
};

/// Path v_1..v_ell with stars S_1, S_i, S_ell whose centers u_j are joined to
/// v_j. s1, si, sl count the leaves of each star.
struct TripleStarPathParams {
  int ell = 0;
  int i = 0;  // 1-based position on the path, 2 <= i <= ell - 1
  int s1 = 0;
  int si = 0;
  int sl = 0;

  int order() const noexcept { return ell + s1 + si + sl + 3; }
};

enum class StarTarget { End1, EndL };

Graph path(int n);
Graph star(int n);

/// Throws BadParams unless t1, t2 >= 1, t1 + t2 = k and ell = n - k >= 2.
Graph double_broom(const DoubleBroomParams& p);

/// Vertex layout: v_j = j - 1 for the path, u_1 = ell, u_i = ell + 1,
/// u_ell = ell + 2, then the leaves of S_1, S_i, S_ell in that order.
Graph triple_star_path(const TripleStarPathParams& p);
Graph relocate_star(const TripleStarPathParams& p, StarTarget target);

/// Hangs two new paths with p and q edges at u. The p-path takes labels
/// n..n+p-1 (outwards from u), the q-path n+p..n+p+q-1.
Graph attach_pendant_paths(const Graph& g, Vertex u, int p, int q);

/// Canonical params when g is isomorphic to some T(n, k; t1, t2) with ell >= 2.
std::optional<DoubleBroomParams> recognize_double_broom(const Graph& g);

/// Number of vertices of degree at least three.
int branch_vertex_count(const Graph& g);

std::string to_string(const DoubleBroomParams& p);

}  // namespace distlap
