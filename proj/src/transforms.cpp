#include "distlap/transforms.hpp"

#include <algorithm>

#include "distlap/eigen.hpp"

namespace distlap {

namespace {

std::vector<int> part_labels(const Graph& g, const BranchDecomposition& d) {
  const int n = g.order();
  auto bad = [](const std::string& why) { return Error(Errc::InvalidDecomposition, why); };
  if (d.v0 < 0 || d.v0 >= n) throw bad("v0 out of range");
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  const std::vector<Vertex>* parts[3] = {&d.g1, &d.g2, &d.g3};
  for (int p = 0; p < 3; ++p) {
    if (parts[p]->size() < 2) throw bad("part G" + std::to_string(p + 1) + " has fewer than two vertices");
    bool has_v0 = false;
    for (Vertex v : *parts[p]) {
      if (v < 0 || v >= n) throw bad("vertex " + std::to_string(v) + " out of range");
      if (v == d.v0) {
        if (has_v0) throw bad("v0 listed twice in one part");
        has_v0 = true;
        continue;
      }
      if (label[v] != -1) throw bad("vertex " + std::to_string(v) + " in more than one part");
      label[v] = p;
    }
    if (!has_v0) throw bad("part G" + std::to_string(p + 1) + " does not contain v0");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v != d.v0 && label[v] == -1) throw bad("vertex " + std::to_string(v) + " not covered");
  }
  // Each component of g - v0 must sit inside one part.
  for (const Edge& e : g.edges()) {
    if (e.u == d.v0 || e.v == d.v0) continue;
    if (label[e.u] != label[e.v]) throw bad("edge crosses parts");
  }
  if (d.u == d.v0 || d.u < 0 || d.u >= n || label[d.u] != 1) throw bad("u must lie in G2 minus v0");
  return label;
}

}  // namespace

void validate_decomposition(const Graph& g, const BranchDecomposition& d) { part_labels(g, d); }

Graph move_branch(const Graph& g, const BranchDecomposition& d) {
  const auto label = part_labels(g, d);
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (e.u == d.v0 && label[e.v] == 2) e.u = d.u;
    else if (e.v == d.v0 && label[e.u] == 2) e.v = d.u;
  }
  return Graph::from_edge_list(g.order(), edges);
}

GraftConditionReport graft_condition(const Graph& g, const BranchDecomposition& d, std::span<const double> x,
                                     GraftVariant variant) {
  if (x.size() != static_cast<std::size_t>(g.order())) {
    throw Error(Errc::DimensionMismatch, "eigenvector length does not match graph order");
  }
  const auto label = part_labels(g, d);
  const double sign = variant == GraftVariant::LaplacianMinus ? -1.0 : 1.0;
  GraftConditionReport r;
  r.variant = variant;
  for (Vertex i : d.g3) {
    if (i == d.v0) continue;
    for (Vertex j : d.g1) {
      const double t = x[i] + sign * x[j];
      r.lhs += t * t;
    }
    for (Vertex j : d.g2) {
      const double t = x[i] + sign * x[j];
      r.rhs += t * t;
    }
  }
  r.strict = r.lhs > r.rhs + comparison_tolerance(r.lhs, r.rhs);
  return r;
}

Graph shift_pendant_path(const Graph& g, Vertex u, std::span<const Vertex> p_path, std::span<const Vertex> q_path) {
  const int n = g.order();
  if (u < 0 || u >= n) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(u));
  if (p_path.empty() || q_path.empty()) throw Error(Errc::NotPendantPath, "both pendant paths need length >= 1");
  if (p_path.size() > q_path.size()) {
    throw Error(Errc::WrongOrder, "p=" + std::to_string(p_path.size()) + " exceeds q=" + std::to_string(q_path.size()));
  }
  if (g.degree(u) < 3) throw Error(Errc::NotPendantPath, "pendant paths hang from a vertex of degree >= 3");
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[u] = 1;
  for (auto path_vertices : {p_path, q_path}) {
    Vertex prev = u;
    for (std::size_t j = 0; j < path_vertices.size(); ++j) {
      const Vertex v = path_vertices[j];
      if (v < 0 || v >= n) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
      if (used[v]) throw Error(Errc::NotPendantPath, "vertex " + std::to_string(v) + " repeated");
      used[v] = 1;
      const int want = j + 1 == path_vertices.size() ? 1 : 2;
      if (!g.adjacent(prev, v) || g.degree(v) != want) {
        throw Error(Errc::NotPendantPath, "vertex " + std::to_string(v) + " breaks the pendant path");
      }
      prev = v;
    }
  }
  const Vertex moved = p_path.back();
  const Vertex old_parent = p_path.size() > 1 ? p_path[p_path.size() - 2] : u;
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if ((e.u == moved && e.v == old_parent) || (e.v == moved && e.u == old_parent)) {
      e = {q_path.back(), moved};
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw Error(Errc::VertexOutOfRange, "edge endpoint");
  if (u == v) throw Error(Errc::LoopEdge, "cannot add loop at " + std::to_string(u));
  if (g.adjacent(u, v)) {
    throw Error(Errc::AlreadyAdjacent, std::to_string(u) + " and " + std::to_string(v) + " already adjacent");
  }
  std::vector<Edge> edges = g.edges();
  edges.push_back({u, v});
  return Graph::from_edge_list(g.order(), edges);
}

std::vector<BranchDecomposition> tree_decompositions(const Graph& tree) {
  if (!tree.is_tree()) throw Error(Errc::NotATree, "decompositions are enumerated for trees only");
  const int n = tree.order();
  std::vector<BranchDecomposition> out;
  for (Vertex v0 = 0; v0 < n; ++v0) {
    const int d = tree.degree(v0);
    if (d < 3) continue;
    // One branch per neighbour of v0.
    std::vector<std::vector<Vertex>> branches;
    for (Vertex root : tree.neighbors(v0)) {
      std::vector<Vertex> comp{root};
      std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
      parent[root] = v0;
      for (std::size_t h = 0; h < comp.size(); ++h) {
        for (Vertex w : tree.neighbors(comp[h])) {
          if (w != parent[comp[h]]) {
            parent[w] = comp[h];
            comp.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      branches.push_back(std::move(comp));
    }
    long long combos = 1;
    for (int j = 0; j < d; ++j) combos *= 3;
    std::vector<int> assign(static_cast<std::size_t>(d));
    for (long long code = 0; code < combos; ++code) {
      long long c = code;
      int used_mask = 0;
      for (int j = 0; j < d; ++j) {
        assign[j] = static_cast<int>(c % 3);
        c /= 3;
        used_mask |= 1 << assign[j];
      }
      if (used_mask != 7) continue;
      BranchDecomposition base;
      base.v0 = v0;
      std::vector<Vertex>* parts[3] = {&base.g1, &base.g2, &base.g3};
      for (auto* p : parts) p->push_back(v0);
      for (int j = 0; j < d; ++j) {
        auto& part = *parts[assign[j]];
        part.insert(part.end(), branches[j].begin(), branches[j].end());
      }
      for (auto* p : parts) std::sort(p->begin(), p->end());
      for (Vertex u : base.g2) {
        if (u == v0) continue;
        BranchDecomposition dec = base;
        dec.u = u;
        out.push_back(std::move(dec));
      }
    }
  }
  return out;
}

}  // namespace distlap
