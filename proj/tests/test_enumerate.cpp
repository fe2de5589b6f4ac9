#include <doctest.h>

#include <set>

#include "distlap/enumerate.hpp"
#include "distlap/families.hpp"
#include "distlap/graph6.hpp"
#include "oracles.hpp"

using namespace distlap;

namespace {

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

TEST_SUITE("enumerate") {
  TEST_CASE("free tree counts") {
    const std::vector<std::size_t> expect{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK(free_trees(n).size() == expect[n - 1]);
  }

  TEST_CASE("free tree counts to 20 (OEIS A000055)") {
    const std::vector<std::size_t> expect{235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955, 823065};
    for (int n = 11; n <= 20; ++n) {
      FreeTreeStream s(n);
      std::size_t c = 0;
      while (s.next()) ++c;
      CHECK(c == expect[n - 11]);
    }
  }

  TEST_CASE("free tree counts match the Prufer oracle up to 8") {
    for (int n = 1; n <= 8; ++n) {
      CHECK(free_trees(n).size() == static_cast<std::size_t>(oracle::count_free_trees_prufer(n)));
    }
  }

  TEST_CASE("trees_with_k_leaves examples") {
    const auto t63 = trees_with_k_leaves({6, 3});
    REQUIRE(t63.size() == 2);
    std::set<std::string> forms;
    for (const auto& t : t63) forms.insert(tree_canonical_form(t));
    CHECK(forms.count(tree_canonical_form(attach_pendant_paths(path(2), 0, 2, 2))) == 1);
    CHECK(forms.count(tree_canonical_form(double_broom(DoubleBroomParams::make(6, 3, 1, 2)))) == 1);

    const auto t54 = trees_with_k_leaves({5, 4});
    REQUIRE(t54.size() == 1);
    CHECK(tree_canonical_form(t54[0]) == tree_canonical_form(star(5)));
    const auto t62 = trees_with_k_leaves({6, 2});
    REQUIRE(t62.size() == 1);
    CHECK(tree_canonical_form(t62[0]) == tree_canonical_form(path(6)));
  }

  TEST_CASE("tree query errors and cap") {
    CHECK(code_of([] { FreeTreeStream s(0); }) == Errc::OutOfRange);
    CHECK(code_of([] { FreeTreeStream s(21); }) == Errc::OutOfRange);
    CHECK(code_of([] { trees_with_k_leaves({6, 1}); }) == Errc::OutOfRange);
    CHECK(code_of([] { trees_with_k_leaves({6, 6}); }) == Errc::OutOfRange);
    TreeClassQuery q{10, std::nullopt, 5};
    CHECK(trees_with_k_leaves(q).size() == 5);
  }

  TEST_CASE("connected_graphs_with_k_pendants examples") {
    const auto g32 = connected_graphs_with_k_pendants({3, 2});
    CHECK(g32.size() == 3);
    for (const auto& g : g32) CHECK(oracle::isomorphic(g, path(3)));
    CHECK(connected_graphs_with_k_pendants({3, 3}).empty());

    const auto g42 = connected_graphs_with_k_pendants({4, 2});
    CHECK(static_cast<long long>(g42.size()) == oracle::count_labeled_connected(4, 2));
    bool has_p4 = false, has_paw = false;
    const Graph paw = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    for (const auto& g : g42) {
      has_p4 = has_p4 || oracle::isomorphic(g, path(4));
      has_paw = has_paw || oracle::isomorphic(g, paw);
    }
    CHECK(has_p4);
    CHECK_FALSE(has_paw);  // the paw has a single pendant vertex
    CHECK(static_cast<long long>(connected_graphs_with_k_pendants({4, 1}).size()) ==
          oracle::count_labeled_connected(4, 1));
  }

  TEST_CASE("labeled graph counts match the subset-scan oracle") {
    for (int n = 1; n <= 6; ++n) {
      for (int k = 0; k <= n; ++k) {
        CHECK(static_cast<long long>(connected_graphs_with_k_pendants({n, k}).size()) ==
              oracle::count_labeled_connected(n, k));
      }
    }
    // OEIS A001187
    CHECK(connected_labeled_graphs(5).size() == 728);
    CHECK(connected_labeled_graphs(6).size() == 26704);
  }

  TEST_CASE("graph query errors") {
    CHECK(code_of([] { ConnectedGraphStream s({8, 2}); }) == Errc::OutOfRange);
    CHECK(code_of([] { ConnectedGraphStream s({9, 2, 9}); }) == Errc::OutOfRange);
    CHECK(code_of([] { ConnectedGraphStream s({0, 0}); }) == Errc::OutOfRange);
    CHECK_NOTHROW(ConnectedGraphStream({8, 2, kHardGraphCap}));
  }

  TEST_CASE("graph streams run in graph6 order") {
    const auto gs = connected_graphs_with_k_pendants({5, 2});
    for (std::size_t i = 1; i < gs.size(); ++i) CHECK(graph6_encode(gs[i - 1]) < graph6_encode(gs[i]));
  }

  TEST_CASE("isomorphism classes of connected graphs") {
    const std::vector<std::size_t> expect{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(connected_graph_classes(n).size() == expect[n - 1]);
    CHECK(code_of([] { connected_graph_classes(8); }) == Errc::OutOfRange);
  }

  TEST_CASE("canonical_small_graph agrees with brute-force isomorphism") {
    const auto classes = connected_graph_classes(5);
    for (std::size_t a = 0; a < classes.size(); ++a)
      for (std::size_t b = a + 1; b < classes.size(); ++b) CHECK_FALSE(oracle::isomorphic(classes[a], classes[b]));
    std::mt19937_64 rng(11);
    for (const auto& g : connected_labeled_graphs(5)) {
      if (rng() % 20) continue;
      const Graph c = canonical_small_graph(g);
      CHECK(oracle::isomorphic(c, g));
      std::vector<Vertex> perm{0, 1, 2, 3, 4};
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_small_graph(relabel(g, perm)) == c);
      CHECK(isomorphism_key(relabel(g, perm)) == isomorphism_key(g));
    }
  }
}

TEST_SUITE("enumerate-properties") {
  TEST_CASE("free trees are distinct, valid trees and split exactly by pendant count") {
    for (int n = 3; n <= 12; ++n) {
      std::set<std::string> forms;
      const auto trees = free_trees(n);
      for (const auto& t : trees) {
        CHECK(t.is_tree());
        CHECK(t.order() == n);
        CHECK(forms.insert(tree_canonical_form(t)).second);
      }
      std::size_t total = 0;
      for (int k = 2; k <= n - 1; ++k) total += trees_with_k_leaves({n, k}).size();
      CHECK(total == trees.size());
    }
  }

  TEST_CASE("streams are deterministic") {
    FreeTreeStream a(11), b(11);
    while (true) {
      auto x = a.next();
      auto y = b.next();
      REQUIRE(x.has_value() == y.has_value());
      if (!x) break;
      CHECK(*x == *y);
    }
    CHECK(connected_graphs_with_k_pendants({5, 1}) == connected_graphs_with_k_pendants({5, 1}));
  }
}
