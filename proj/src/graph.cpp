#include "distlap/graph.hpp"

#include <algorithm>
#include <cmath>

namespace distlap {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::Disconnected: return "Disconnected";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotATree: return "NotATree";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::BadParams: return "BadParams";
    case Errc::InvalidDecomposition: return "InvalidDecomposition";
    case Errc::NotPendantPath: return "NotPendantPath";
    case Errc::WrongOrder: return "WrongOrder";
    case Errc::AlreadyAdjacent: return "AlreadyAdjacent";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::EmptyClass: return "EmptyClass";
    case Errc::UnknownLemma: return "UnknownLemma";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 1) throw Error(Errc::VertexOutOfRange, "graph needs at least one vertex, got n=" + std::to_string(n));
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(Errc::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n=" + std::to_string(n));
    }
    if (e.u == e.v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(e.u));
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < g.adjacency_.size(); ++v) {
    auto& nb = g.adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (auto it = std::adjacent_find(nb.begin(), nb.end()); it != nb.end()) {
      throw Error(Errc::DuplicateEdge, "edge (" + std::to_string(v) + "," + std::to_string(*it) + ") repeated");
    }
  }
  g.edge_count_ = static_cast<int>(edges.size());

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw Error(Errc::Disconnected, "only " + std::to_string(reached) + " of " + std::to_string(n) +
                                        " vertices reachable from vertex 0");
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_complete() const noexcept {
  const long long n = order();
  return edge_count_ == n * (n - 1) / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void SymMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = static_cast<std::size_t>(order_);
  const double* a = entries_.data();
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * n;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : entries_) s += v * v;
  return std::sqrt(s);
}

DistanceData distance_data(const Graph& g) {
  const int n = g.order();
  DistanceData d;
  d.n = n;
  d.dist.assign(static_cast<std::size_t>(n) * n, -1);
  d.trans.assign(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    int* row = d.dist.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    long long total = 0;
    while (head < tail) {
      Vertex v = queue[head++];
      for (Vertex w : g.neighbors(v)) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          total += row[w];
          queue[tail++] = w;
        }
      }
    }
    d.trans[s] = total;
  }
  d.tr_max = n > 0 ? *std::max_element(d.trans.begin(), d.trans.end()) : 0;
  return d;
}

namespace {

SymMatrix build_distance_laplacian(const DistanceData& d, double sign) {
  SymMatrix m(d.n);
  for (int i = 0; i < d.n; ++i) {
    m.set(i, i, static_cast<double>(d.trans[i]));
    for (int j = i + 1; j < d.n; ++j) m.set(i, j, sign * d.at(i, j));
  }
  return m;
}

void check_dimension(int n, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::DimensionMismatch,
                "vector of length " + std::to_string(x.size()) + " for graph of order " + std::to_string(n));
  }
}

}  // namespace

SymMatrix build_L(const DistanceData& d) { return build_distance_laplacian(d, -1.0); }
SymMatrix build_Q(const DistanceData& d) { return build_distance_laplacian(d, 1.0); }
SymMatrix build_L(const Graph& g) { return build_L(distance_data(g)); }
SymMatrix build_Q(const Graph& g) { return build_Q(distance_data(g)); }

double quadratic_form_L(const DistanceData& d, std::span<const double> x) {
  check_dimension(d.n, x);
  double s = 0.0;
  for (int u = 0; u < d.n; ++u) {
    for (int v = u + 1; v < d.n; ++v) {
      const double diff = x[u] - x[v];
      s += d.at(u, v) * diff * diff;
    }
  }
  return s;
}

double quadratic_form_Q(const DistanceData& d, std::span<const double> x) {
  check_dimension(d.n, x);
  double s = 0.0;
  for (int u = 0; u < d.n; ++u) {
    for (int v = u + 1; v < d.n; ++v) {
      const double sum = x[u] + x[v];
      s += d.at(u, v) * sum * sum;
    }
  }
  return s;
}

double quadratic_form_L(const Graph& g, std::span<const double> x) {
  check_dimension(g.order(), x);
  return quadratic_form_L(distance_data(g), x);
}

double quadratic_form_Q(const Graph& g, std::span<const double> x) {
  check_dimension(g.order(), x);
  return quadratic_form_Q(distance_data(g), x);
}

DegreeSummary degrees_and_pendants(const Graph& g) {
  DegreeSummary s;
  s.degrees.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    s.degrees[v] = g.degree(v);
    if (s.degrees[v] == 1) s.pendants.push_back(v);
  }
  return s;
}

int pendant_count(const Graph& g) {
  int k = 0;
  for (Vertex v = 0; v < g.order(); ++v) k += g.degree(v) == 1;
  return k;
}

namespace {

// Centroids: vertices whose largest remaining component has size <= n/2.
std::vector<Vertex> centroids(const Graph& g, const std::vector<Vertex>& order, const std::vector<Vertex>& parent) {
  const int n = g.order();
  std::vector<int> subtree(static_cast<std::size_t>(n), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int largest = n - subtree[v];
    for (Vertex w : g.neighbors(v)) {
      if (w != parent[v]) largest = std::max(largest, subtree[w]);
    }
    if (2 * largest <= n) out.push_back(v);
  }
  return out;
}

void bfs_order(const Graph& g, Vertex root, std::vector<Vertex>& order, std::vector<Vertex>& parent) {
  const int n = g.order();
  order.clear();
  parent.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  order.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
}

std::string ahu_encoding(const Graph& g, Vertex root) {
  std::vector<Vertex> order, parent;
  bfs_order(g, root, order, parent);
  std::vector<std::vector<std::string>> child_codes(static_cast<std::size_t>(g.order()));
  std::vector<std::string> code(static_cast<std::size_t>(g.order()));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[*it];
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ')';
    kids.clear();
    if (parent[*it] >= 0) {
      child_codes[parent[*it]].push_back(std::move(s));
    } else {
      code[*it] = std::move(s);
    }
  }
  return code[root];
}

}  // namespace

std::string tree_canonical_form(const Graph& g) {
  if (!g.is_tree()) {
    throw Error(Errc::NotATree, "graph of order " + std::to_string(g.order()) + " has " +
                                    std::to_string(g.edge_count()) + " edges");
  }
  std::vector<Vertex> order, parent;
  bfs_order(g, 0, order, parent);
  const auto cs = centroids(g, order, parent);
  std::string best = ahu_encoding(g, cs.front());
  for (std::size_t i = 1; i < cs.size(); ++i) best = std::min(best, ahu_encoding(g, cs[i]));
  return best;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) {
    throw Error(Errc::DimensionMismatch, "permutation length does not match graph order");
  }
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e = {perm[e.u], perm[e.v]};
  return Graph::from_edge_list(g.order(), edges);
}

}  // namespace distlap
