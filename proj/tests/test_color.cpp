#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "choose72/color.hpp"
#include "choose72/graph.hpp"
#include "choose72/rng.hpp"
#include "support/fixtures.hpp"

using namespace choose72;

TEST_CASE("color set operations") {
    ColorSet a = ColorSet::of({3, 1, 2, 2});
    CHECK(a.values == std::vector<int>{1, 2, 3});
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(4));
    a.trim_to(2);
    CHECK(a.values == std::vector<int>{1, 2});
    ColorSet b = ColorSet::of({2, 5});
    CHECK(a.set_minus(b).values == std::vector<int>{1});
    CHECK(a.set_intersect(b).values == std::vector<int>{2});
    CHECK(a.set_union(b).values == std::vector<int>{1, 2, 5});
    CHECK(ColorSet::of({1}).subset_of(a));
    CHECK_FALSE(b.subset_of(a));
    CHECK_THROWS(ColorSet::of({-1}));
}

TEST_CASE("remaining list") {
    Graph p = generate_petersen();
    ListAssignment L;
    L.lists.assign(p.edge_count(), ColorSet::range(1, 8));  // {1..7}
    SetColoring phi = SetColoring::empty_for(p, 2);
    EdgeId e = 0;  // (0,1)
    CHECK(remaining_list(p, L, phi, e) == L.at(e));

    // two incident edges choose {1,2} and {3}
    auto inc = p.incident_edges(e);
    phi.chosen[inc[0]] = ColorSet::of({1, 2});
    phi.chosen[inc[1]] = ColorSet::of({3});
    CHECK(remaining_list(p, L, phi, e).values == std::vector<int>{4, 5, 6, 7});

    // choices outside the list leave it whole
    phi = SetColoring::empty_for(p, 2);
    phi.chosen[inc[0]] = ColorSet::of({20, 21});
    CHECK(remaining_list(p, L, phi, e) == L.at(e));

    CHECK_THROWS(remaining_list(p, L, phi, 99));
}

TEST_CASE("save margin") {
    Graph p = generate_petersen();
    ListAssignment L;
    L.lists.assign(p.edge_count(), ColorSet::range(1, 8));
    SetColoring phi = SetColoring::empty_for(p, 2);
    EdgeId e = 0;
    CHECK(save_margin(p, L, phi, e) == 0);

    // four colors on two incident edges using only three from L(e)
    auto inc = p.incident_edges(e);
    phi.chosen[inc[0]] = ColorSet::of({1, 2});
    phi.chosen[inc[1]] = ColorSet::of({2, 3});
    CHECK(save_margin(p, L, phi, e) == 1);

    // two single choices sharing one color of L(e)
    phi = SetColoring::empty_for(p, 2);
    phi.chosen[inc[0]] = ColorSet::of({5});
    phi.chosen[inc[1]] = ColorSet::of({5});
    CHECK(save_margin(p, L, phi, e) == 1);
}

TEST_CASE("save margin agrees with a direct recount") {
    Graph p = generate_petersen();
    SplitMix64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        ListAssignment L = make_uniform_assignment(p, 7, 14, rng.next());
        SetColoring phi = SetColoring::empty_for(p, 2);
        for (EdgeId f = 0; f < p.edge_count(); ++f)
            while (phi.chosen[f].size() < static_cast<int>(rng.below(3)))
                phi.chosen[f].insert(static_cast<int>(rng.below(14)));
        for (EdgeId e = 0; e < p.edge_count(); ++e) {
            int events = 0;
            ColorSet removed;
            for (EdgeId f : p.incident_edges(e)) {
                events += phi.chosen[f].size();
                removed = removed.set_union(phi.chosen[f].set_intersect(L.at(e)));
            }
            CHECK(save_margin(p, L, phi, e) == events - removed.size());
        }
    }
}

TEST_CASE("verify set coloring") {
    Graph c4 = generate_even_cycle(4);
    ListAssignment L;
    L.lists.assign(4, ColorSet::of({1, 2, 3, 4}));
    SetColoring phi = SetColoring::empty_for(c4, 2);
    // edges in canonical order: (0,1), (0,3), (1,2), (2,3)
    phi.chosen[0] = ColorSet::of({1, 2});
    phi.chosen[1] = ColorSet::of({3, 4});
    phi.chosen[2] = ColorSet::of({3, 4});
    phi.chosen[3] = ColorSet::of({1, 2});
    CHECK(verify_set_coloring(c4, L, phi, 2).empty());

    SUBCASE("overlap") {
        phi.chosen[2] = ColorSet::of({2, 4});
        auto v = verify_set_coloring(c4, L, phi, 2);
        REQUIRE(!v.empty());
        CHECK(v.front().rule == ColoringViolation::Rule::overlap);
    }
    SUBCASE("multiplicity") {
        phi.chosen[3] = ColorSet::of({1});
        auto v = verify_set_coloring(c4, L, phi, 2);
        REQUIRE(!v.empty());
        CHECK(v.front().rule == ColoringViolation::Rule::multiplicity);
    }
    SUBCASE("outside list") {
        phi.chosen[3] = ColorSet::of({1, 9});
        auto v = verify_set_coloring(c4, L, phi, 2);
        REQUIRE(!v.empty());
        CHECK(v.front().rule == ColoringViolation::Rule::not_in_list);
    }
}

TEST_CASE("uniform assignments") {
    Graph c4 = generate_even_cycle(4);
    ListAssignment forced = make_uniform_assignment(c4, 4, 4, 99);
    for (const auto& l : forced.lists) CHECK(l == ColorSet::range(0, 4));

    Graph p = generate_petersen();
    ListAssignment same = make_uniform_assignment(p, 7, 7, 1);
    for (const auto& l : same.lists) CHECK(l == ColorSet::range(0, 7));

    ListAssignment a = make_uniform_assignment(p, 7, 14, 1);
    ListAssignment b = make_uniform_assignment(p, 7, 14, 1);
    for (EdgeId e = 0; e < p.edge_count(); ++e) CHECK(a.at(e) == b.at(e));
    CHECK(a.uniform_size() == 7);

    CHECK_THROWS(make_uniform_assignment(p, 8, 7, 1));
}

TEST_CASE("remaining lists shrink monotonically") {
    Graph p = generate_petersen();
    SplitMix64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        ListAssignment L = make_uniform_assignment(p, 7, 14, rng.next());
        SetColoring phi = SetColoring::empty_for(p, 2);
        std::vector<ColorSet> prev(p.edge_count());
        for (EdgeId e = 0; e < p.edge_count(); ++e) prev[e] = remaining_list(p, L, phi, e);
        for (int step = 0; step < 10; ++step) {
            EdgeId f = static_cast<EdgeId>(rng.below(p.edge_count()));
            phi.chosen[f].insert(static_cast<int>(rng.below(14)));
            for (EdgeId e = 0; e < p.edge_count(); ++e) {
                ColorSet now = remaining_list(p, L, phi, e);
                CHECK(now.subset_of(prev[e]));
                prev[e] = now;
            }
        }
    }
}
