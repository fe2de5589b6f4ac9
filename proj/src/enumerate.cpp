#include "distlap/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "distlap/graph6.hpp"

namespace distlap {

void check_tree_query(const TreeClassQuery& q) {
  if (q.n < 1 || q.n > kMaxTreeOrder) {
    throw Error(Errc::OutOfRange, "tree order must be in [1, " + std::to_string(kMaxTreeOrder) + "], got " +
                                      std::to_string(q.n));
  }
  if (q.k && (*q.k < 2 || *q.k > q.n - 1)) {
    throw Error(Errc::OutOfRange, "pendant count must be in [2, n-1], got " + std::to_string(*q.k));
  }
}

void check_graph_query(const GraphClassQuery& q) {
  if (q.cap > kHardGraphCap) throw Error(Errc::OutOfRange, "graph enumeration cap cannot exceed 8");
  if (q.n < 1 || q.n > q.cap) {
    throw Error(Errc::OutOfRange, "graph order must be in [1, " + std::to_string(q.cap) + "], got " +
                                      std::to_string(q.n));
  }
  if (q.k < 0 || q.k > q.n) throw Error(Errc::OutOfRange, "pendant count out of range");
}

// Level sequences follow the Wright-Richmond-Odlyzko-McKay scheme: a free
// tree is represented by the level sequence of its canonical rooting at the
// center, and successive rooted sequences are pruned to those that are
// canonical as free trees.
FreeTreeStream::FreeTreeStream(int n) : n_(n) {
  check_tree_query({n, std::nullopt});
  if (n <= 2) return;
  for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
}

bool FreeTreeStream::next_rooted(int p) {
  if (p < 0) {
    p = static_cast<int>(layout_.size()) - 1;
    while (p > 0 && layout_[p] == 1) --p;
  }
  if (p == 0) return false;
  int q = p - 1;
  while (layout_[q] != layout_[p] - 1) --q;
  for (std::size_t i = static_cast<std::size_t>(p); i < layout_.size(); ++i) layout_[i] = layout_[i - p + q];
  return true;
}

namespace {

struct Split {
  int left_size = 0;  // vertices in the first subtree of the root
  int left_height = 0;
  int rest_height = 0;
  bool left_greater = false;  // left subtree sequence > rest sequence
  int rest_size = 0;
};

Split split_layout(const std::vector<int>& layout) {
  const int n = static_cast<int>(layout.size());
  int m = n;
  bool one_found = false;
  for (int i = 0; i < n; ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Split s;
  s.left_size = m - 1;
  // left = layout[1..m) - 1 ; rest = [0] + layout[m..n)
  std::vector<int> left, rest{0};
  for (int i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (int i = m; i < n; ++i) rest.push_back(layout[i]);
  s.left_height = left.empty() ? 0 : *std::max_element(left.begin(), left.end());
  s.rest_height = *std::max_element(rest.begin(), rest.end());
  s.rest_size = static_cast<int>(rest.size());
  s.left_greater = left > rest;
  return s;
}

}  // namespace

void FreeTreeStream::advance_to_free() {
  const Split s = split_layout(layout_);
  bool valid = s.rest_height >= s.left_height;
  if (valid && s.rest_height == s.left_height) {
    if (s.left_size > s.rest_size) {
      valid = false;
    } else if (s.left_size == s.rest_size && s.left_greater) {
      valid = false;
    }
  }
  if (valid) return;
  const int p = s.left_size;
  const int at_p = layout_[p];
  next_rooted(p);
  if (at_p > 2) {
    const Split fresh = split_layout(layout_);
    const int len = fresh.left_height + 1;
    for (int j = 0; j < len; ++j) layout_[layout_.size() - len + j] = j + 1;
  }
}

std::optional<Graph> FreeTreeStream::next() {
  if (done_) return std::nullopt;
  if (n_ <= 2) {
    done_ = true;
    return n_ == 1 ? Graph::from_edge_list(1, {}) : Graph::from_edge_list(2, std::vector<Edge>{{0, 1}});
  }
  if (started_ && !next_rooted(-1)) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  advance_to_free();
  return tree_from_levels(layout_);
}

Graph tree_from_levels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  std::vector<Vertex> stack;  // stack[d] = most recent vertex at depth d
  for (int i = 0; i < n; ++i) {
    const int d = levels[i];
    if (d > 0) edges.push_back({stack[d - 1], i});
    stack.resize(static_cast<std::size_t>(d));
    stack.push_back(i);
  }
  return Graph::from_edge_list(n, edges);
}

TreeClassStream::TreeClassStream(const TreeClassQuery& q) : query_(q), trees_(q.n) { check_tree_query(q); }

std::optional<Graph> TreeClassStream::next() {
  while (yielded_ < query_.cap) {
    auto t = trees_.next();
    if (!t) return std::nullopt;
    if (query_.k && pendant_count(*t) != *query_.k) continue;
    ++yielded_;
    return t;
  }
  return std::nullopt;
}

ConnectedGraphStream::ConnectedGraphStream(const GraphClassQuery& q) : n_(q.n), k_(q.k) {
  check_graph_query(q);
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i) pair_of_bit_.push_back({i, j});
  pairs_ = static_cast<int>(pair_of_bit_.size());
  end_ = std::uint64_t{1} << pairs_;
}

std::optional<Graph> ConnectedGraphStream::next() {
  // Pair b sits at bit (pairs_ - 1 - b), so ascending masks visit the graph6
  // bit strings in lexicographic order.
  std::uint32_t adj[kHardGraphCap];
  while (mask_ < end_) {
    const std::uint64_t mask = mask_++;
    if (std::popcount(mask) < n_ - 1) continue;
    std::fill(adj, adj + n_, 0u);
    for (int b = 0; b < pairs_; ++b) {
      if (mask >> (pairs_ - 1 - b) & 1) {
        const auto [i, j] = pair_of_bit_[b];
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
    int pendants = 0;
    for (int v = 0; v < n_; ++v) pendants += std::popcount(adj[v]) == 1;
    if (pendants != k_) continue;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (std::uint32_t{1} << n_) - 1) continue;
    std::vector<Edge> edges;
    for (int b = 0; b < pairs_; ++b) {
      if (mask >> (pairs_ - 1 - b) & 1) edges.push_back({pair_of_bit_[b].first, pair_of_bit_[b].second});
    }
    return Graph::from_edge_list(n_, edges);
  }
  return std::nullopt;
}

std::vector<Graph> free_trees(int n) {
  FreeTreeStream s(n);
  std::vector<Graph> out;
  while (auto t = s.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<Graph> trees_with_k_leaves(const TreeClassQuery& q) {
  TreeClassStream s(q);
  std::vector<Graph> out;
  while (auto t = s.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<Graph> connected_graphs_with_k_pendants(const GraphClassQuery& q) {
  ConnectedGraphStream s(q);
  std::vector<Graph> out;
  while (auto g = s.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<Graph> connected_labeled_graphs(int n) {
  std::vector<Graph> out;
  for (int k = 0; k <= n; ++k) {
    auto part = connected_graphs_with_k_pendants({n, k, std::max(n, kDefaultGraphCap)});
    for (auto& g : part) out.push_back(std::move(g));
  }
  return out;
}

Graph canonical_small_graph(const Graph& g) {
  const int n = g.order();
  if (n > 9) throw Error(Errc::OutOfRange, "brute-force canonical labeling is limited to n <= 9");
  std::vector<Vertex> ord(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ord[i] = i;
  std::stable_sort(ord.begin(), ord.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(ord[j]) == g.degree(ord[i])) ++j;
    cells.push_back({i, j});
    i = j;
  }
  std::uint32_t adj[9] = {};
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;

  auto key_of = [&](const std::vector<Vertex>& o) {
    std::uint64_t key = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) key = (key << 1) | ((adj[o[i]] >> o[j]) & 1u);
    return key;
  };
  std::vector<Vertex> best = ord;
  std::uint64_t best_key = key_of(ord);
  for (;;) {
    bool advanced = false;
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
      if (std::next_permutation(ord.begin() + it->first, ord.begin() + it->second)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    const std::uint64_t k = key_of(ord);
    if (k < best_key) {
      best_key = k;
      best = ord;
    }
  }
  // best[new] = old
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[best[i]] = i;
  return relabel(g, perm);
}

std::vector<Graph> connected_graph_classes(int n) {
  if (n < 1 || n > kDefaultGraphCap) throw Error(Errc::OutOfRange, "isomorphism classes are enumerated for n <= 7");
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> reps;
  for (int k = 0; k <= n; ++k) {
    ConnectedGraphStream stream({n, k, kDefaultGraphCap});
    while (auto g = stream.next()) {
      Graph c = canonical_small_graph(*g);
      std::string code = graph6_encode(c);
      if (seen.insert(code).second) reps.emplace_back(std::move(code), std::move(c));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& r : reps) out.push_back(std::move(r.second));
  return out;
}

std::string isomorphism_key(const Graph& g) {
  if (g.is_tree()) return "T" + tree_canonical_form(g);
  if (g.order() <= 9) return "G" + graph6_encode(canonical_small_graph(g));
  return "L" + graph6_encode(g);
}

}  // namespace distlap
