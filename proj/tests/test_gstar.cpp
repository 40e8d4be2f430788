#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "choose72/chooser.hpp"
#include "choose72/oracle.hpp"
#include "choose72/rng.hpp"
#include "support/fixtures.hpp"

using namespace choose72;

TEST_CASE("special-graph chooser on identical lists") {
    Graph g = generate_gstar();
    ListAssignment L;
    L.lists.assign(g.edge_count(), ColorSet::range(0, 7));
    ChooseOutcome out = choose_gstar(g, L);
    REQUIRE_MESSAGE(out.ok(), *out.gap);
    CHECK(verify_set_coloring(g, L, *out.coloring, 2).empty());
}

TEST_CASE("special-graph chooser rejects other graphs") {
    Graph p = generate_petersen();
    ListAssignment L;
    L.lists.assign(p.edge_count(), ColorSet::range(0, 7));
    CHECK_THROWS(choose_gstar(p, L));
}

TEST_CASE("special-graph chooser fuzz") {
    Graph g = generate_gstar();
    SplitMix64 rng(61);
    for (int trial = 0; trial < 1000; ++trial) {
        ListAssignment L = make_uniform_assignment(g, 7, 14, rng.next());
        ChooseOutcome out = choose_gstar(g, L);
        REQUIRE_MESSAGE(out.ok(), *out.gap);
        CHECK(verify_set_coloring(g, L, *out.coloring, 2).empty());
    }
}

TEST_CASE("hand-built instance forces the intersection route") {
    Graph g = generate_gstar();
    GstarLayout layout = gstar_layout();
    ListAssignment L;
    L.lists.assign(g.edge_count(), ColorSet::range(0, 7));
    const GstarPiece& p2 = layout.piece[2];
    // pieces 0 and 1 all alike; the last piece built so every escape set is
    // empty: interior lists {0..6}, its 4-cycle {2..8}, pendant {0,1,2,3,4,7,8}
    L.at(p2.pendant) = ColorSet::of({0, 1, 2, 3, 4, 7, 8});
    for (EdgeId e : p2.quad) L.at(e) = ColorSet::of({2, 3, 4, 5, 6, 7, 8});

    ChooseOutcome out = choose_gstar(g, L);
    REQUIRE_MESSAGE(out.ok(), *out.gap);
    CHECK(verify_set_coloring(g, L, *out.coloring, 2).empty());
    bool intersection = false;
    for (const auto& ev : out.trace)
        if (ev.note == "intersection route committed") intersection = true;
    CHECK(intersection);

    // the oracle agrees the instance is colorable
    OracleResult oracle = brute_force_choose(g, L, 2);
    CHECK(oracle.verdict == OracleResult::Verdict::yes);
}

TEST_CASE("special-graph chooser is deterministic") {
    Graph g = generate_gstar();
    ListAssignment L = make_uniform_assignment(g, 7, 14, 4242);
    ChooseOutcome a = choose_gstar(g, L);
    ChooseOutcome b = choose_gstar(g, L);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        CHECK(a.coloring->chosen[e] == b.coloring->chosen[e]);
}
