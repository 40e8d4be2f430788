#pragma once

#include <functional>
#include <vector>

#include "choose72/decomposition.hpp"
#include "choose72/graph.hpp"

namespace choose72::fixtures {

inline Graph k4() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph prism() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                     {0, 3}, {1, 4}, {2, 5}});
}

inline Graph k33() {
    return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                     {2, 3}, {2, 4}, {2, 5}});
}

inline Graph cube() {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < 8; ++v)
        for (int bit : {1, 2, 4})
            if (v < (v ^ bit)) e.emplace_back(v, v ^ bit);
    return Graph(8, e);
}

// K4 with one edge subdivided: 5 vertices, 7 edges, one degree-2 vertex
inline Graph subdivided_k4() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

inline Graph path3() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph star3() { return Graph(4, {{0, 3}, {1, 3}, {2, 3}}); }
inline Graph k2() { return Graph(2, {{0, 1}}); }

inline Graph two_disjoint_k4s() {
    return Graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                     {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
}

// The torus-drawing decomposition of the Petersen graph under the canonical
// labeling: double-star centered on (0,1), an 8-cycle through the other
// vertices, and the two leftover chords as the matching.
inline MedDecomposition petersen_torus_med(const Graph& p) {
    MedDecomposition d;
    DoubleStar star;
    star.center = *p.edge_between(0, 1);
    star.leaves = {*p.edge_between(0, 4), *p.edge_between(0, 5),
                   *p.edge_between(1, 2), *p.edge_between(1, 6)};
    d.stars.push_back(star);
    std::vector<EdgeId> cyc;
    std::vector<int> ring = {2, 3, 4, 9, 6, 8, 5, 7};
    for (size_t i = 0; i < ring.size(); ++i)
        cyc.push_back(*p.edge_between(ring[i], ring[(i + 1) % ring.size()]));
    d.cycles.push_back(make_cycle_trail(p, cyc));
    d.matching = {*p.edge_between(3, 8), *p.edge_between(7, 9)};
    return d;
}

// Two opposite faces of the cube as the even cycles, verticals as the matching.
inline MedDecomposition cube_two_cycle_med(const Graph& c) {
    MedDecomposition d;
    auto face = [&](std::vector<int> ring) {
        std::vector<EdgeId> cyc;
        for (size_t i = 0; i < ring.size(); ++i)
            cyc.push_back(*c.edge_between(ring[i], ring[(i + 1) % ring.size()]));
        return make_cycle_trail(c, cyc);
    };
    d.cycles.push_back(face({0, 1, 3, 2}));
    d.cycles.push_back(face({4, 5, 7, 6}));
    d.matching = {*c.edge_between(0, 4), *c.edge_between(1, 5),
                  *c.edge_between(2, 6), *c.edge_between(3, 7)};
    return d;
}

// Two 4-cycles tied together by one double-star whose leaf pairs straddle
// both cycles, plus two bridging matching edges; the smallest decomposition
// that reaches a second cycle through either a matching edge or a leaf pair.
inline Graph dumbbell() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7},
                      {4, 7}, {8, 9}, {0, 8}, {4, 8}, {2, 9}, {6, 9}, {1, 5},
                      {3, 7}});
}

inline MedDecomposition dumbbell_med(const Graph& g) {
    MedDecomposition d;
    auto cyc = [&](std::vector<int> ring) {
        std::vector<EdgeId> e;
        for (size_t i = 0; i < ring.size(); ++i)
            e.push_back(*g.edge_between(ring[i], ring[(i + 1) % ring.size()]));
        return make_cycle_trail(g, e);
    };
    d.cycles.push_back(cyc({0, 1, 2, 3}));
    d.cycles.push_back(cyc({4, 5, 6, 7}));
    DoubleStar s;
    s.center = *g.edge_between(8, 9);
    s.leaves = {*g.edge_between(0, 8), *g.edge_between(4, 8),
                *g.edge_between(2, 9), *g.edge_between(6, 9)};
    d.stars.push_back(s);
    d.matching = {*g.edge_between(1, 5), *g.edge_between(3, 7)};
    return d;
}

// Generalized Petersen graph: outer n-cycle, spokes, inner step-k cycle.
inline Graph generalized_petersen(int n, int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(i, n + i);
        e.emplace_back(n + i, n + (i + k) % n);
    }
    return Graph(2 * n, e);
}

inline std::vector<std::vector<EdgeId>> perfect_matchings(const Graph& g) {
    std::vector<std::vector<EdgeId>> out;
    std::vector<EdgeId> cur;
    std::vector<char> used(g.vertex_count(), 0);
    std::function<void()> go = [&]() {
        VertexId v = -1;
        for (VertexId w = 0; w < g.vertex_count(); ++w)
            if (!used[w]) {
                v = w;
                break;
            }
        if (v < 0) {
            out.push_back(cur);
            return;
        }
        for (EdgeId e : g.edges_at(v)) {
            VertexId w = g.other_end(e, v);
            if (used[w]) continue;
            used[v] = used[w] = 1;
            cur.push_back(e);
            go();
            cur.pop_back();
            used[v] = used[w] = 0;
        }
    };
    go();
    return out;
}

// The explicit long cycle of the flower snark omitting x_k and y_1, as a
// vertex sequence under the canonical labeling (w_i = i-1, x_i = k+i-1,
// y_i = 2k+i-1, z_i = 3k+i-1).
inline std::vector<VertexId> flower_long_cycle(int k) {
    auto w = [&](int i) { return i - 1; };
    auto x = [&](int i) { return k + i - 1; };
    auto y = [&](int i) { return 2 * k + i - 1; };
    auto z = [&](int i) { return 3 * k + i - 1; };
    std::vector<VertexId> seq = {x(1)};
    for (int i = 2; i <= k - 1; ++i) {
        if (i % 2 == 0) {
            seq.push_back(x(i));
            seq.push_back(w(i));
            seq.push_back(y(i));
        } else {
            seq.push_back(y(i));
            seq.push_back(w(i));
            seq.push_back(x(i));
        }
    }
    seq.push_back(y(k));
    seq.push_back(w(k));
    for (int i = k; i >= 1; --i) seq.push_back(z(i));
    seq.push_back(w(1));
    return seq;
}

// MED decomposition built from a cycle through all vertices but the two ends
// of `center`: that edge's star plus the leftover chords.
inline MedDecomposition med_from_long_cycle(const Graph& g,
                                            const std::vector<VertexId>& cycle,
                                            EdgeId center) {
    MedDecomposition d;
    DoubleStar star;
    star.center = center;
    auto [u, v] = g.endpoints(center);
    int idx = 0;
    for (EdgeId e : g.edges_at(u))
        if (e != center) star.leaves[idx++] = e;
    for (EdgeId e : g.edges_at(v))
        if (e != center) star.leaves[idx++] = e;
    d.stars.push_back(star);
    std::vector<EdgeId> cyc;
    for (size_t i = 0; i < cycle.size(); ++i)
        cyc.push_back(*g.edge_between(cycle[i], cycle[(i + 1) % cycle.size()]));
    d.cycles.push_back(make_cycle_trail(g, cyc));
    std::vector<char> used(g.edge_count(), 0);
    used[center] = 1;
    for (EdgeId e : star.leaves) used[e] = 1;
    for (EdgeId e : cyc) used[e] = 1;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!used[e]) d.matching.push_back(e);
    return d;
}

}  // namespace choose72::fixtures
