#include <doctest.h>

#include "distlap/enumerate.hpp"
#include "distlap/families.hpp"
#include "distlap/graph6.hpp"
#include "distlap/report.hpp"
#include "distlap/verify.hpp"
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

ClassQuery trees(int n, int k) { return {GraphClass::Trees, n, k}; }

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("extremal search over T(6,3) picks the broom") {
    const auto c = extremal_search(trees(6, 3), Objective::RhoL);
    CHECK(c.scanned == 2);
    REQUIRE(c.winner_params);
    CHECK(*c.winner_params == DoubleBroomParams::make(6, 3, 1, 2));
    CHECK(c.in_family);
    CHECK(c.family_verdict == "member");
    CHECK(c.ties.empty());
    CHECK(c.winner_rho == doctest::Approx(18.713005966949975).epsilon(1e-10));
    CHECK(tree_canonical_form(graph6_decode(c.winner)) ==
          tree_canonical_form(double_broom(DoubleBroomParams::make(6, 3, 1, 2))));
    CHECK(c.passes());
  }

  TEST_CASE("singleton classes") {
    for (int n = 4; n <= 9; ++n) {
      for (auto obj : {Objective::RhoL, Objective::RhoQ}) {
        const auto p = extremal_search(trees(n, 2), obj);
        CHECK(p.scanned == 1);
        CHECK(tree_canonical_form(graph6_decode(p.winner)) == tree_canonical_form(path(n)));
      }
    }
    const auto s = extremal_search(trees(5, 4), Objective::RhoQ);
    CHECK(s.scanned == 1);
    CHECK(tree_canonical_form(graph6_decode(s.winner)) == tree_canonical_form(star(5)));
    CHECK_FALSE(s.claimed);  // k = n - 1 lies outside the asserted range
    CHECK_FALSE(s.in_family);
    CHECK(s.passes());
  }

  TEST_CASE("scanned equals class size and the winner dominates everything scanned") {
    for (int n = 5; n <= 9; ++n) {
      for (int k = 2; k <= n - 1; ++k) {
        const auto members = trees_with_k_leaves({n, k});
        const auto c = extremal_search(trees(n, k), Objective::RhoQ);
        CHECK(c.scanned == members.size());
        for (const auto& t : members) CHECK(rho_Q(t).rho <= c.winner_rho + comparison_tolerance(c.winner_rho, 0));
      }
    }
  }

  TEST_CASE("graph class search") {
    const auto c = extremal_search({GraphClass::Graphs, 5, 3}, Objective::RhoL);
    CHECK(static_cast<long long>(c.scanned) == oracle::count_labeled_connected(5, 3));
    CHECK(c.winner_is_tree);
    REQUIRE(c.winner_params);
    CHECK(*c.winner_params == DoubleBroomParams::make(5, 3, 1, 2));
    CHECK(c.non_tree_ties == 0);
  }

  TEST_CASE("serial and parallel searches agree exactly") {
    for (int n = 6; n <= 11; ++n) {
      for (int k = 2; k <= n - 2; ++k) {
        for (auto obj : {Objective::RhoL, Objective::RhoQ}) {
          const auto s = extremal_search_serial(trees(n, k), obj);
          for (int threads : {1, 3, 8}) {
            const auto p = extremal_search(trees(n, k), obj, {threads, 7});
            CHECK(certificate_json(p).dump() == certificate_json(s).dump());
          }
        }
      }
    }
    const auto s = extremal_search_serial({GraphClass::Graphs, 6, 2}, Objective::RhoQ);
    const auto p = extremal_search({GraphClass::Graphs, 6, 2}, Objective::RhoQ, {4, 100});
    CHECK(certificate_json(p).dump() == certificate_json(s).dump());
  }

  TEST_CASE("batch kernel matches the serial kernel") {
    const auto ts = free_trees(10);
    for (auto obj : {Objective::RhoL, Objective::RhoQ}) {
      CHECK(evaluate_spectral_radii(ts, obj, 4) == evaluate_spectral_radii_serial(ts, obj));
    }
  }

  TEST_CASE("empty and out-of-range classes") {
    CHECK(code_of([] { extremal_search({GraphClass::Graphs, 3, 3}, Objective::RhoL); }) == Errc::EmptyClass);
    CHECK(code_of([] { extremal_search(trees(21, 3), Objective::RhoL); }) == Errc::OutOfRange);
    CHECK(code_of([] { extremal_search({GraphClass::Graphs, 8, 3}, Objective::RhoL); }) == Errc::OutOfRange);
  }

  TEST_CASE("lemma ids") {
    CHECK(parse_lemma("pendant-shift-L") == Lemma::PendantShiftL);
    CHECK(parse_lemma("pendant-shift-Q") == Lemma::PendantShiftQ);
    CHECK(parse_lemma("edge-addition-Q") == Lemma::EdgeAdditionQ);
    CHECK(parse_lemma("nath-paul") == Lemma::TransmissionBound);
    CHECK(lemma_name(Lemma::StarRelocation) == "star-relocation");
    CHECK(all_lemmas().size() == 8);
    for (Lemma l : all_lemmas()) CHECK(parse_lemma(lemma_name(l)) == l);
    CHECK(code_of([] { parse_lemma("9.9"); }) == Errc::UnknownLemma);
    CHECK(code_of([] { parse_lemma(""); }) == Errc::UnknownLemma);
  }

  TEST_CASE("sweep: edge addition at n <= 5 includes P3 -> K3") {
    const auto r = sweep_lemma(Lemma::EdgeAdditionL, {5, 6});
    CHECK(r.violations.empty());
    CHECK(r.consistent());
    CHECK(r.instances > 0);
    const auto q = sweep_lemma(Lemma::EdgeAdditionQ, {5, 6});
    CHECK(q.violations.empty());
    CHECK(q.confirmed == q.instances);
    CHECK_FALSE(q.notes.empty());
    // the single non-edge of P3
    const auto p3 = sweep_lemma(Lemma::EdgeAdditionL, {3, 6});
    CHECK(p3.instances == 1);
  }

  TEST_CASE("sweep: transmission bound ties exactly at complete graphs") {
    const auto r = sweep_lemma(Lemma::TransmissionBound, {5, 6});
    CHECK(r.violations.empty());
    CHECK(r.ties == 4);  // K_2 .. K_5
    CHECK(r.instances == 1 + 2 + 6 + 21);
    for (const auto& code : r.tie_graphs) CHECK(graph6_decode(code).is_complete());
  }

  TEST_CASE("sweep: pendant shifts and star relocation at small bounds") {
    for (Lemma l : {Lemma::PendantShiftL, Lemma::PendantShiftQ}) {
      const auto r = sweep_lemma(l, {4, 4});
      CHECK(r.violations.empty());
      CHECK(r.ties == 0);
      CHECK(r.consistent());
    }
    const auto s = sweep_lemma(Lemma::StarRelocation, {10, 6});
    CHECK(s.violations.empty());
    CHECK(s.instances > 0);
  }

  TEST_CASE("sweep: branch moves at small bounds") {
    for (Lemma l : {Lemma::BranchMoveL, Lemma::BranchMoveQ}) {
      const auto r = sweep_lemma(l, {7, 6});
      CHECK(r.violations.empty());
      CHECK(r.consistent());
      CHECK(r.instances > 0);
    }
  }

  TEST_CASE("sweep bounds are capped") {
    CHECK(code_of([] { sweep_lemma(Lemma::PendantShiftL, {8, 6}); }) == Errc::OutOfRange);
  }

  TEST_CASE("sweep results do not depend on the thread count") {
    const auto a = sweep_lemma(Lemma::PendantShiftQ, {5, 5}, {1, 1024});
    const auto b = sweep_lemma(Lemma::PendantShiftQ, {5, 5}, {8, 1024});
    CHECK(sweep_json(a).dump() == sweep_json(b).dump());
  }

  TEST_CASE("broom profile") {
    const auto rows = report_broom_profile(6, 4, Objective::RhoL);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].t1 == 1);
    CHECK(rows[0].t2 == 3);
    CHECK(rows[1].t1 == 2);
    CHECK(rows[1].t2 == 2);
    CHECK(rows[0].rank + rows[1].rank == 3);
    const auto p = report_broom_profile(8, 2, Objective::RhoQ);
    REQUIRE(p.size() == 1);
    CHECK(p[0].t1 == 1);
    CHECK(p[0].t2 == 1);
    const auto q = report_broom_profile(7, 3, Objective::RhoQ);
    REQUIRE(q.size() == 1);
    CHECK(q[0].t1 == 1);
    CHECK(q[0].t2 == 2);
    CHECK(code_of([] { report_broom_profile(5, 4, Objective::RhoL); }) == Errc::BadParams);
    CHECK(code_of([] { report_broom_profile(6, 1, Objective::RhoL); }) == Errc::BadParams);
  }

  TEST_CASE("objective names") {
    CHECK(objective_name(Objective::RhoL) == "rhoL");
    CHECK(parse_objective("rhoQ") == Objective::RhoQ);
    CHECK(parse_objective("L") == Objective::RhoL);
    CHECK_THROWS_AS(parse_objective("rhoX"), Error);
  }
}

TEST_SUITE("verify-properties") {
  TEST_CASE("graph class winners are double brooms for 5 <= n <= 6") {
    for (int n = 5; n <= 6; ++n) {
      for (int k = 2; k <= n - 2; ++k) {
        for (auto obj : {Objective::RhoL, Objective::RhoQ}) {
          const auto c = extremal_search({GraphClass::Graphs, n, k}, obj, {1, 4096});
          CHECK(c.winner_is_tree);
          CHECK(c.in_family);
          CHECK(c.non_tree_ties == 0);
          CHECK(c.out_of_family_ties == 0);
        }
      }
    }
  }
}
