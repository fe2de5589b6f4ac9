#include <doctest.h>

#include <cmath>
#include <random>

#include "distlap/enumerate.hpp"
#include "distlap/families.hpp"
#include "distlap/graph.hpp"
#include "distlap/transforms.hpp"
#include "oracles.hpp"

using namespace distlap;

namespace {

Graph make(int n, std::vector<Edge> edges) { return Graph::from_edge_list(n, edges); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::ParseError;
}

}  // namespace

TEST_SUITE("graph-core") {
  TEST_CASE("from_edge_list builds small graphs") {
    const Graph p2 = make(2, {{0, 1}});
    CHECK(p2.order() == 2);
    CHECK(p2.edge_count() == 1);
    CHECK(p2.adjacent(0, 1));

    const Graph s4 = make(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(s4.degree(0) == 3);
    CHECK(s4.is_tree());
    CHECK(std::vector<Vertex>(s4.neighbors(0).begin(), s4.neighbors(0).end()) == std::vector<Vertex>{1, 2, 3});

    const Graph single = make(1, {});
    CHECK(single.order() == 1);
    CHECK(single.edge_count() == 0);
  }

  TEST_CASE("from_edge_list rejects bad input") {
    CHECK(code_of([] { make(4, {{0, 1}, {2, 3}}); }) == Errc::Disconnected);
    CHECK(code_of([] { make(2, {{0, 0}, {0, 1}}); }) == Errc::LoopEdge);
    CHECK(code_of([] { make(2, {{0, 1}, {1, 0}}); }) == Errc::DuplicateEdge);
    CHECK(code_of([] { make(2, {{0, 2}}); }) == Errc::VertexOutOfRange);
    CHECK(code_of([] { make(3, {{0, -1}, {1, 2}}); }) == Errc::VertexOutOfRange);
  }

  TEST_CASE("neighbor lists are sorted and symmetric") {
    const Graph g = make(5, {{4, 0}, {2, 0}, {3, 1}, {1, 0}, {2, 4}});
    for (Vertex v = 0; v < 5; ++v) {
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) CHECK(g.adjacent(w, v));
    }
    const auto edges = g.edges();
    CHECK(edges.front() == Edge{0, 1});
    CHECK(edges.size() == 5);
  }

  TEST_CASE("distance_data on paths and stars") {
    const auto p3 = distance_data(path(3));
    CHECK(p3.trans == std::vector<long long>{3, 2, 3});
    CHECK(p3.tr_max == 3);
    CHECK(distance_data(path(4)).trans == std::vector<long long>{6, 4, 4, 6});
    CHECK(distance_data(star(4)).trans == std::vector<long long>{3, 5, 5, 5});
    const auto one = distance_data(make(1, {}));
    CHECK(one.trans == std::vector<long long>{0});
  }

  TEST_CASE("build_L and build_Q examples") {
    const SymMatrix l = build_L(path(3));
    const std::vector<double> expect_l{3, -1, -2, -1, 2, -1, -2, -1, 3};
    CHECK(std::vector<double>(l.entries().begin(), l.entries().end()) == expect_l);
    const SymMatrix q = build_Q(path(3));
    const std::vector<double> expect_q{3, 1, 2, 1, 2, 1, 2, 1, 3};
    CHECK(std::vector<double>(q.entries().begin(), q.entries().end()) == expect_q);

    const SymMatrix l2 = build_L(path(2));
    CHECK(l2(0, 0) == 1);
    CHECK(l2(0, 1) == -1);
    const SymMatrix q2 = build_Q(path(2));
    CHECK(q2(0, 1) == 1);

    const Graph k3 = make(3, {{0, 1}, {0, 2}, {1, 2}});
    const SymMatrix lk = build_L(k3), qk = build_Q(k3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        CHECK(lk(i, j) == (i == j ? 2.0 : -1.0));  // 3I - J
        CHECK(qk(i, j) == (i == j ? 2.0 : 1.0));   // I + J
      }
    }
    CHECK(build_L(make(1, {})).order() == 1);
    CHECK(build_L(make(1, {}))(0, 0) == 0.0);
  }

  TEST_CASE("quadratic form examples") {
    const std::vector<double> ones3{1, 1, 1};
    CHECK(quadratic_form_L(path(3), ones3) == 0.0);
    CHECK(quadratic_form_L(path(2), std::vector<double>{1, 0}) == 1.0);
    CHECK(quadratic_form_L(path(3), std::vector<double>{1, 0, -1}) == 10.0);
    CHECK(quadratic_form_Q(path(2), std::vector<double>{1, -1}) == 0.0);
    CHECK(quadratic_form_Q(path(2), std::vector<double>{1, 1}) == 4.0);
    CHECK(quadratic_form_Q(path(3), ones3) == 16.0);
    CHECK(code_of([] { quadratic_form_L(path(3), std::vector<double>{1, 2}); }) == Errc::DimensionMismatch);
    CHECK(code_of([] { quadratic_form_Q(path(2), std::vector<double>{1, 2, 3}); }) == Errc::DimensionMismatch);
  }

  TEST_CASE("degrees_and_pendants") {
    auto p4 = degrees_and_pendants(path(4));
    CHECK(p4.pendants == std::vector<Vertex>{0, 3});
    CHECK(p4.degrees == std::vector<int>{1, 2, 2, 1});
    CHECK(degrees_and_pendants(star(4)).pendants.size() == 3);
    CHECK(degrees_and_pendants(make(3, {{0, 1}, {0, 2}, {1, 2}})).pendants.empty());
  }

  TEST_CASE("tree_canonical_form") {
    const Graph p4 = path(4);
    // order (2,0,3,1): old vertex v becomes position of v in that order
    const Graph p4r = relabel(p4, std::vector<Vertex>{1, 3, 0, 2});
    CHECK_FALSE(p4 == p4r);
    CHECK(tree_canonical_form(p4) == tree_canonical_form(p4r));
    CHECK(tree_canonical_form(star(4)) != tree_canonical_form(p4));

    const Graph spider221 = attach_pendant_paths(path(2), 0, 2, 2);
    const Graph spider311 = make(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}});
    CHECK(tree_canonical_form(spider221) != tree_canonical_form(spider311));
    CHECK_FALSE(oracle::isomorphic(spider221, spider311));
    CHECK(code_of([] { tree_canonical_form(make(3, {{0, 1}, {0, 2}, {1, 2}})); }) == Errc::NotATree);
  }

  TEST_CASE("canonical form agrees with brute-force isomorphism on trees up to 8") {
    for (int n = 1; n <= 8; ++n) {
      const auto trees = free_trees(n);
      for (std::size_t a = 0; a < trees.size(); ++a) {
        for (std::size_t b = a; b < trees.size(); ++b) {
          const bool same_form = tree_canonical_form(trees[a]) == tree_canonical_form(trees[b]);
          CHECK(same_form == (a == b));
        }
      }
      // random relabelings keep the form
      std::mt19937_64 rng(static_cast<std::uint64_t>(n));
      for (const auto& t : trees) {
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph r = relabel(t, perm);
        CHECK(tree_canonical_form(r) == tree_canonical_form(t));
        CHECK(oracle::isomorphic(r, t));
      }
    }
  }
}

TEST_SUITE("graph-core-properties") {
  TEST_CASE("distances match Floyd-Warshall and satisfy the metric axioms") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& g : connected_graph_classes(n)) {
        const auto d = distance_data(g);
        const auto fw = oracle::distances(g);
        long long total = 0;
        for (int u = 0; u < n; ++u) {
          long long t = 0;
          for (int v = 0; v < n; ++v) {
            REQUIRE(d.at(u, v) == fw[u][v]);
            CHECK(d.at(u, v) == d.at(v, u));
            CHECK((u == v) == (d.at(u, v) == 0));
            for (int w = 0; w < n; ++w) CHECK(d.at(u, w) <= d.at(u, v) + d.at(v, w));
            t += d.at(u, v);
          }
          CHECK(d.trans[u] == t);
          total += t;
        }
        CHECK(total % 2 == 0);
        CHECK(d.tr_max == *std::max_element(d.trans.begin(), d.trans.end()));
      }
    }
  }

  TEST_CASE("adding an edge never increases a distance") {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& g : connected_graph_classes(n)) {
        const auto before = distance_data(g);
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            const auto after = distance_data(add_edge(g, u, v));
            for (std::size_t i = 0; i < before.dist.size(); ++i) CHECK(after.dist[i] <= before.dist[i]);
            CHECK(after.at(u, v) == 1);
          }
        }
      }
    }
  }

  TEST_CASE("matrices match the oracle, rows of L sum to zero, rows of Q to twice the transmission") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& g : connected_graph_classes(n)) {
        const SymMatrix l = build_L(g), q = build_Q(g);
        const auto lo = oracle::matrix_L(g), qo = oracle::matrix_Q(g);
        const auto d = distance_data(g);
        for (int i = 0; i < n; ++i) {
          double rl = 0.0, rq = 0.0;
          for (int j = 0; j < n; ++j) {
            CHECK(l(i, j) == lo[i][j]);
            CHECK(q(i, j) == qo[i][j]);
            CHECK(l(i, j) == l(j, i));
            rl += l(i, j);
            rq += q(i, j);
          }
          CHECK(rl == 0.0);
          CHECK(rq == 2.0 * static_cast<double>(d.trans[i]));
        }
      }
    }
  }

  TEST_CASE("quadratic forms: bilinear agreement, semidefiniteness, definiteness") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 11);
      const Graph g = oracle::random_connected_graph(rng, n, 0.2);
      std::vector<double> x(static_cast<std::size_t>(n));
      for (auto& v : x) v = normal(rng);
      const double ql = quadratic_form_L(g, x), qq = quadratic_form_Q(g, x);
      const double bl = oracle::bilinear(oracle::matrix_L(g), x), bq = oracle::bilinear(oracle::matrix_Q(g), x);
      CHECK(std::abs(ql - bl) <= 1e-12 * std::max(1.0, std::abs(bl)));
      CHECK(std::abs(qq - bq) <= 1e-12 * std::max(1.0, std::abs(bq)));
      CHECK(ql > 0.0);  // x is not constant with probability one
      if (n >= 3) CHECK(qq > 0.0);
      std::vector<double> c(static_cast<std::size_t>(n), normal(rng));
      CHECK(quadratic_form_L(g, c) == doctest::Approx(0.0));
    }
  }

  TEST_CASE("all-ones is in the kernel of L") {
    for (const auto& g : connected_graph_classes(5)) {
      const SymMatrix l = build_L(g);
      std::vector<double> ones(5, 1.0), y(5);
      l.multiply(ones, y);
      for (double v : y) CHECK(v == 0.0);
    }
  }
}
