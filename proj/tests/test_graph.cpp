#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "choose72/graph.hpp"
#include "choose72/rng.hpp"
#include "support/fixtures.hpp"

using namespace choose72;

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS(Graph(3, {{0, 0}}));
    CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));
    CHECK_THROWS(Graph(2, {{0, 5}}));
    CHECK_THROWS(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));  // degree 4
    CHECK_NOTHROW(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, false));
}

TEST_CASE("graph6 hand-decoded fixtures") {
    // "D?{" decodes to the 4-star: bytes 0 and 60 set exactly the four
    // upper-triangle bits (0,4), (1,4), (2,4), (3,4)
    Graph g = parse_graph6("D?{", false);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_THROWS(parse_graph6("D?{"));  // center degree 4 trips the default gate

    Graph k4 = parse_graph6("C~");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    for (VertexId v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK(encode_graph6(fixtures::k4()) == "C~");
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS(parse_graph6(""));
    CHECK_THROWS(parse_graph6("D?"));     // truncated body
    CHECK_THROWS(parse_graph6("D?{?"));   // trailing garbage
    CHECK_THROWS(parse_graph6(":D?{"));   // sparse6
    CHECK_THROWS(parse_graph6("B\x01")); // byte out of range
    CHECK_THROWS(parse_graph6("D~{"));    // K5 trips the degree gate
    CHECK(parse_graph6("D~{", false).edge_count() == 10);
}

TEST_CASE("graph6 round trip over generators") {
    std::vector<Graph> pool = {generate_petersen(),     generate_flower_snark(5),
                               generate_flower_snark(7), generate_gstar(),
                               generate_two_k4_gadget(), generate_even_cycle(4),
                               generate_even_cycle(8),   fixtures::cube(),
                               fixtures::prism(),        fixtures::k2(),
                               generate_even_cycle(64),  generate_flower_snark(17)};
    for (const Graph& g : pool) CHECK(parse_graph6(encode_graph6(g)) == g);
    // 64 vertices crosses into the long-form header
    CHECK(encode_graph6(generate_even_cycle(64)).substr(0, 1) == "~");
}

TEST_CASE("graph6 round trip on random subcubic graphs") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng.below(20));
        std::vector<std::pair<int, int>> edges;
        std::vector<int> deg(n, 0);
        for (int attempt = 0; attempt < 3 * n; ++attempt) {
            int u = static_cast<int>(rng.below(n));
            int v = static_cast<int>(rng.below(n));
            if (u == v || deg[u] >= 3 || deg[v] >= 3) continue;
            if (u > v) std::swap(u, v);
            if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) !=
                edges.end())
                continue;
            edges.emplace_back(u, v);
            deg[u]++;
            deg[v]++;
        }
        Graph g(n, edges);
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("petersen generator") {
    Graph p = generate_petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    StructureReport rep = structure_checks(p);
    CHECK(rep.cubic);
    CHECK(rep.two_connected);
    CHECK(rep.girth == 5);
    for (EdgeId e = 0; e < p.edge_count(); ++e)
        CHECK(p.incident_edges(e).size() == 4);
}

TEST_CASE("flower snark generator") {
    Graph f5 = generate_flower_snark(5);
    CHECK(f5.vertex_count() == 20);
    CHECK(f5.edge_count() == 30);
    StructureReport rep = structure_checks(f5);
    CHECK(rep.cubic);
    CHECK(rep.connected);
    CHECK(generate_flower_snark(7).edge_count() == 42);
    CHECK_THROWS(generate_flower_snark(4));
    CHECK_THROWS(generate_flower_snark(3));
}

TEST_CASE("special graph generator and layout") {
    Graph g = generate_gstar();
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 24);
    CHECK(structure_checks(g).cubic);
    CHECK(fixtures::perfect_matchings(g).empty());

    GstarLayout layout = gstar_layout();
    CHECK(layout.hub == 15);
    for (const GstarPiece& p : layout.piece) {
        auto [u, v] = g.endpoints(p.pendant);
        CHECK((u == 15 || v == 15));
        // quad order: first two edges meet fork[0], last two meet fork[1]
        CHECK(g.shared_vertex(p.quad[0], p.fork[0]));
        CHECK(g.shared_vertex(p.quad[1], p.fork[0]));
        CHECK(g.shared_vertex(p.quad[2], p.fork[1]));
        CHECK(g.shared_vertex(p.quad[3], p.fork[1]));
        CHECK_FALSE(g.shared_vertex(p.opposite, p.fork[0]));
        CHECK_FALSE(g.shared_vertex(p.opposite, p.fork[1]));
        CHECK_FALSE(g.shared_vertex(p.opposite, p.pendant));
    }
}

TEST_CASE("two-K4 gadget generator") {
    Graph g = generate_two_k4_gadget();
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    StructureReport rep = structure_checks(g);
    CHECK(rep.cubic);
    CHECK(rep.connected);
    CHECK_FALSE(rep.two_connected);
    CHECK(rep.bridge_count == 1);

    EdgeId bridge = *g.edge_between(4, 9);
    auto pms = fixtures::perfect_matchings(g);
    CHECK(!pms.empty());
    for (const auto& pm : pms)
        CHECK(std::find(pm.begin(), pm.end(), bridge) != pm.end());
}

TEST_CASE("even cycle generator") {
    CHECK(generate_even_cycle(4).edge_count() == 4);
    CHECK(generate_even_cycle(6).edge_count() == 6);
    for (VertexId v = 0; v < 4; ++v) CHECK(generate_even_cycle(4).degree(v) == 2);
    CHECK_THROWS(generate_even_cycle(5));
    CHECK_THROWS(generate_even_cycle(2));
}

TEST_CASE("incident edges") {
    Graph c4 = generate_even_cycle(4);
    for (EdgeId e = 0; e < 4; ++e) CHECK(c4.incident_edges(e).size() == 2);
    Graph single = fixtures::k2();
    CHECK(single.incident_edges(0).empty());
    CHECK_THROWS(single.incident_edges(5));
}

TEST_CASE("incidence is symmetric") {
    SplitMix64 rng(5);
    std::vector<Graph> pool = {generate_petersen(), fixtures::cube(),
                               fixtures::prism(), fixtures::path3()};
    for (const Graph& g : pool)
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (EdgeId f : g.incident_edges(e)) {
                auto back = g.incident_edges(f);
                CHECK(std::find(back.begin(), back.end(), e) != back.end());
            }
    (void)rng;
}

TEST_CASE("structure checks on small graphs") {
    StructureReport c6 = structure_checks(generate_even_cycle(6));
    CHECK(c6.subcubic);
    CHECK_FALSE(c6.cubic);
    CHECK(c6.two_connected);
    CHECK(c6.girth == 6);

    StructureReport path = structure_checks(fixtures::path3());
    CHECK_FALSE(path.girth.has_value());
    CHECK_FALSE(path.two_connected);
    CHECK(path.bridge_count == 3);
}

TEST_CASE("cycle trail validation") {
    Graph c6 = generate_even_cycle(6);
    std::vector<EdgeId> edges;
    for (int i = 0; i < 6; ++i) edges.push_back(*c6.edge_between(i, (i + 1) % 6));
    CycleTrail t = make_cycle_trail(c6, edges);
    CHECK(t.length() == 6);
    CHECK_THROWS(make_cycle_trail(c6, {edges[0], edges[2], edges[4]}));
    CHECK_THROWS(make_cycle_trail(c6, {edges[0], edges[1]}));
    CHECK_THROWS(make_cycle_trail(c6, {edges[0], edges[1], edges[1], edges[2]}));
}
