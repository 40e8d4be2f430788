#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "choose72/chooser.hpp"
#include "choose72/oracle.hpp"
#include "choose72/rng.hpp"
#include "support/fixtures.hpp"

using namespace choose72;

TEST_CASE("brute force choosing") {
    Graph c4 = generate_even_cycle(4);
    SUBCASE("tight lists admit the alternating pattern") {
        ListAssignment L;
        L.lists.assign(4, ColorSet::of({1, 2, 3, 4}));
        OracleResult r = brute_force_choose(c4, L, 2);
        REQUIRE(r.verdict == OracleResult::Verdict::yes);
        CHECK(verify_set_coloring(c4, L, *r.witness, 2).empty());
        CHECK(r.nodes > 0);
    }
    SUBCASE("pair lists cannot satisfy incident edges") {
        ListAssignment L;
        L.lists.assign(4, ColorSet::of({1, 2}));
        CHECK(brute_force_choose(c4, L, 2).verdict == OracleResult::Verdict::no);
    }
    SUBCASE("node counts are deterministic") {
        ListAssignment L = make_uniform_assignment(c4, 4, 8, 17);
        CHECK(brute_force_choose(c4, L, 2).nodes == brute_force_choose(c4, L, 2).nodes);
    }
}

TEST_CASE("colorability with identical palettes") {
    CHECK(brute_force_rs_colorable(generate_even_cycle(4), 4, 2).verdict ==
          OracleResult::Verdict::yes);
    CHECK(brute_force_rs_colorable(fixtures::k2(), 2, 2).verdict ==
          OracleResult::Verdict::yes);
    // doubling the classes of a proper 3-edge-coloring needs six colors
    CHECK(brute_force_rs_colorable(fixtures::k4(), 6, 2).verdict ==
          OracleResult::Verdict::yes);
    // three colors cannot give two disjoint pairs to incident edges
    CHECK(brute_force_rs_colorable(generate_even_cycle(4), 3, 2).verdict ==
          OracleResult::Verdict::no);
}

TEST_CASE("budget verdicts are distinct from refutations") {
    // fifteen edges need at least fifteen expansions, so ten cannot finish
    OracleResult r = brute_force_rs_colorable(generate_petersen(), 6, 2, 10);
    CHECK(r.verdict == OracleResult::Verdict::budget_exceeded);
}

TEST_CASE("exhaustive choosability on tiny graphs") {
    SUBCASE("single edge") {
        ChoosabilityResult r = exhaustive_choosability_check(fixtures::k2(), 2, 2, 2);
        CHECK(r.verdict == OracleResult::Verdict::yes);
        CHECK(r.assignments_checked >= 1);
    }
    SUBCASE("three-lists fail on a four-cycle") {
        ChoosabilityResult r =
            exhaustive_choosability_check(generate_even_cycle(4), 3, 2, 4);
        CHECK(r.verdict == OracleResult::Verdict::no);
        REQUIRE(r.counterexample.has_value());
        CHECK(brute_force_choose(generate_even_cycle(4), *r.counterexample, 2).verdict ==
              OracleResult::Verdict::no);
    }
    SUBCASE("four-lists from a five-color palette succeed") {
        ChoosabilityResult r =
            exhaustive_choosability_check(generate_even_cycle(4), 4, 2, 5);
        CHECK(r.verdict == OracleResult::Verdict::yes);
    }
}

TEST_CASE("chooser success implies oracle yes") {
    SplitMix64 rng(67);
    Graph k4 = fixtures::k4();
    auto tec = find_proper_3ec(k4);
    REQUIRE(tec.has_value());
    for (int trial = 0; trial < 50; ++trial) {
        ListAssignment L = make_uniform_assignment(k4, 7, 14, rng.next());
        ChooseOutcome out = choose_3ec(k4, *tec, L);
        REQUIRE(out.ok());
        OracleResult oracle = brute_force_choose(k4, L, 2);
        CHECK(oracle.verdict == OracleResult::Verdict::yes);
        CHECK(verify_set_coloring(k4, L, *oracle.witness, 2).empty());
    }
}

TEST_CASE("oracle agrees with the pipelines at their native sizes") {
    SplitMix64 rng(73);
    {
        Graph p = generate_petersen();
        auto med = find_med_by_long_cycle(p);
        REQUIRE(med.has_value());
        for (int trial = 0; trial < 100; ++trial) {
            ListAssignment L = make_uniform_assignment(p, 7, 14, rng.next());
            REQUIRE(choose_med(p, *med, L).ok());
            CHECK(brute_force_choose(p, L, 2).verdict == OracleResult::Verdict::yes);
        }
    }
    {
        Graph g = generate_gstar();
        for (int trial = 0; trial < 100; ++trial) {
            ListAssignment L = make_uniform_assignment(g, 7, 14, rng.next());
            REQUIRE(choose_gstar(g, L).ok());
            CHECK(brute_force_choose(g, L, 2).verdict == OracleResult::Verdict::yes);
        }
    }
}

TEST_CASE("oracle rejects oversized inputs") {
    Graph c4 = generate_even_cycle(4);
    ListAssignment L;
    L.lists.assign(4, ColorSet::range(0, 70));
    CHECK_THROWS(brute_force_choose(c4, L, 2));
    CHECK_THROWS(exhaustive_choosability_check(c4, 4, 2, 9));
}
