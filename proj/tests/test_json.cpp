#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "choose72/chooser.hpp"
#include "choose72/json_io.hpp"
#include "choose72/rng.hpp"
#include "support/fixtures.hpp"

using namespace choose72;

TEST_CASE("wire formats survive a round trip") {
    Graph p = generate_petersen();
    SplitMix64 rng(71);
    for (int trial = 0; trial < 25; ++trial) {
        ListAssignment L = make_uniform_assignment(p, 7, 14, rng.next());
        ListAssignment back = assignment_from_json(p, assignment_to_json(p, L));
        for (EdgeId e = 0; e < p.edge_count(); ++e) CHECK(L.at(e) == back.at(e));

        MedDecomposition med = fixtures::petersen_torus_med(p);
        ChooseOutcome out = choose_med(p, med, L);
        REQUIRE(out.ok());
        SetColoring phi = coloring_from_json(p, coloring_to_json(*out.coloring));
        for (EdgeId e = 0; e < p.edge_count(); ++e)
            CHECK(phi.chosen[e] == out.coloring->chosen[e]);
    }
}

TEST_CASE("decomposition json carries the full structure") {
    Graph p = generate_petersen();
    MedDecomposition med = fixtures::petersen_torus_med(p);
    MedDecomposition back = med_from_json(p, med_to_json(med));
    CHECK(verify_med(p, back).empty());
    CHECK(back.matching == med.matching);
    REQUIRE(back.cycles.size() == med.cycles.size());
    CHECK(back.cycles[0].edges == med.cycles[0].edges);
    REQUIRE(back.stars.size() == 1);
    CHECK(back.stars[0].center == med.stars[0].center);
    CHECK(back.stars[0].leaves == med.stars[0].leaves);
}

TEST_CASE("mismatched payloads are rejected") {
    Graph p = generate_petersen();
    Graph c4 = generate_even_cycle(4);
    ListAssignment L = make_uniform_assignment(c4, 7, 14, 1);
    std::string text = assignment_to_json(c4, L);
    CHECK_THROWS(assignment_from_json(p, text));
    CHECK_THROWS(coloring_from_json(p, "{\"s\":2,\"chosen\":[[0,1]]}"));
}
