#include "distlap/families.hpp"

#include <algorithm>
#include <vector>

namespace distlap {

DoubleBroomParams DoubleBroomParams::canonical() const {
  DoubleBroomParams p = *this;
  if (p.t1 > p.t2) std::swap(p.t1, p.t2);
  return p;
}

Graph path(int n) {
  if (n < 1) throw Error(Errc::TooSmall, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edge_list(n, edges);
}

Graph star(int n) {
  if (n < 2) throw Error(Errc::TooSmall, "star needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edge_list(n, edges);
}

Graph double_broom(const DoubleBroomParams& p) {
  if (p.t1 < 1 || p.t2 < 1 || p.t1 + p.t2 != p.k || p.ell != p.n - p.k || p.ell < 2) {
    throw Error(Errc::BadParams, "invalid double broom " + to_string(p));
  }
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < p.ell; ++v) edges.push_back({v, v + 1});
  int next = p.ell;
  for (int j = 0; j < p.t1; ++j) edges.push_back({0, next++});
  for (int j = 0; j < p.t2; ++j) edges.push_back({p.ell - 1, next++});
  Graph g = Graph::from_edge_list(p.n, edges);
  if (pendant_count(g) != p.k) {
    throw Error(Errc::BadParams, "double broom " + to_string(p) + " has " + std::to_string(pendant_count(g)) +
                                     " pendant vertices");
  }
  return g;
}

namespace {

void check_triple(const TripleStarPathParams& p) {
  if (p.ell < 3 || p.i < 2 || p.i > p.ell - 1 || p.s1 < 1 || p.si < 1 || p.sl < 1) {
    throw Error(Errc::BadParams, "triple star path needs ell >= 3, 2 <= i <= ell-1 and every star with >= 1 leaf");
  }
}

std::vector<Edge> triple_star_edges(const TripleStarPathParams& p, Vertex star_i_anchor) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < p.ell; ++v) edges.push_back({v, v + 1});
  const Vertex u1 = p.ell, ui = p.ell + 1, ul = p.ell + 2;
  edges.push_back({0, u1});
  edges.push_back({star_i_anchor, ui});
  edges.push_back({p.ell - 1, ul});
  int next = p.ell + 3;
  for (int j = 0; j < p.s1; ++j) edges.push_back({u1, next++});
  for (int j = 0; j < p.si; ++j) edges.push_back({ui, next++});
  for (int j = 0; j < p.sl; ++j) edges.push_back({ul, next++});
  return edges;
}

}  // namespace

Graph triple_star_path(const TripleStarPathParams& p) {
  check_triple(p);
  return Graph::from_edge_list(p.order(), triple_star_edges(p, p.i - 1));
}

Graph relocate_star(const TripleStarPathParams& p, StarTarget target) {
  check_triple(p);
  return Graph::from_edge_list(p.order(), triple_star_edges(p, target == StarTarget::End1 ? 0 : p.ell - 1));
}

Graph attach_pendant_paths(const Graph& g, Vertex u, int p, int q) {
  if (u < 0 || u >= g.order()) throw Error(Errc::VertexOutOfRange, "attachment vertex " + std::to_string(u));
  if (g.order() < 2) throw Error(Errc::TooSmall, "base graph must have order >= 2");
  if (p < 0 || q < 0) throw Error(Errc::BadParams, "path lengths must be non-negative");
  std::vector<Edge> edges = g.edges();
  int next = g.order();
  for (int len : {p, q}) {
    Vertex prev = u;
    for (int j = 0; j < len; ++j) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Graph::from_edge_list(next, edges);
}

std::optional<DoubleBroomParams> recognize_double_broom(const Graph& g) {
  const int n = g.order();
  if (!g.is_tree() || n < 4) return std::nullopt;
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 1) inner.push_back(v);
  }
  if (inner.size() < 2) return std::nullopt;

  // Removing the leaves of a tree leaves a subtree; it is a path iff every
  // inner vertex has at most two inner neighbours.
  std::vector<Vertex> ends;
  for (Vertex v : inner) {
    int inner_nb = 0;
    for (Vertex w : g.neighbors(v)) inner_nb += g.degree(w) > 1;
    if (inner_nb > 2) return std::nullopt;
    if (inner_nb == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return std::nullopt;

  int leaves_at_ends = 0;
  int t[2] = {0, 0};
  for (int e = 0; e < 2; ++e) {
    for (Vertex w : g.neighbors(ends[e])) t[e] += g.degree(w) == 1;
    leaves_at_ends += t[e];
  }
  const int k = n - static_cast<int>(inner.size());
  if (leaves_at_ends != k) return std::nullopt;
  return DoubleBroomParams::make(n, k, t[0], t[1]).canonical();
}

int branch_vertex_count(const Graph& g) {
  int c = 0;
  for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) >= 3;
  return c;
}

std::string to_string(const DoubleBroomParams& p) {
  return "T(" + std::to_string(p.n) + "," + std::to_string(p.k) + ";" + std::to_string(p.t1) + "," +
         std::to_string(p.t2) + ")";
}

}  // namespace distlap
