#include "choose72/decomposition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace choose72 {

int ThreeEdgeColoring::class_of(EdgeId e) const {
    for (int c = 0; c < 3; ++c)
        if (std::find(classes[c].begin(), classes[c].end(), e) != classes[c].end())
            return c;
    return -1;
}

std::optional<ThreeEdgeColoring> find_proper_3ec(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 3) throw std::invalid_argument("max degree exceeds 3");
    const int m = g.edge_count();

    // BFS order over the line graph so constraints bind early
    std::vector<EdgeId> order;
    std::vector<char> queued(m, 0);
    for (EdgeId s = 0; s < m; ++s) {
        if (queued[s]) continue;
        std::queue<EdgeId> q;
        q.push(s);
        queued[s] = 1;
        while (!q.empty()) {
            EdgeId e = q.front();
            q.pop();
            order.push_back(e);
            for (EdgeId f : g.incident_edges(e))
                if (!queued[f]) {
                    queued[f] = 1;
                    q.push(f);
                }
        }
    }

    std::vector<int> color(m, -1);
    std::vector<std::vector<EdgeId>> nbrs(m);
    for (EdgeId e = 0; e < m; ++e) nbrs[e] = g.incident_edges(e);

    auto feasible = [&](int depth) {
        // every uncolored edge must retain a free color
        for (int d = depth; d < m; ++d) {
            EdgeId e = order[d];
            int banned = 0;
            for (EdgeId f : nbrs[e])
                if (color[f] >= 0) banned |= 1 << color[f];
            if (banned == 7) return false;
        }
        return true;
    };

    std::vector<int> tried(m, -1);
    int depth = 0;
    while (true) {
        if (depth == m) break;
        EdgeId e = order[depth];
        int banned = 0;
        for (EdgeId f : nbrs[e])
            if (color[f] >= 0) banned |= 1 << color[f];
        int c = tried[depth] + 1;
        while (c < 3 && ((banned >> c) & 1)) ++c;
        if (c < 3) {
            color[e] = c;
            tried[depth] = c;
            if (feasible(depth + 1)) {
                ++depth;
                if (depth < m) tried[depth] = -1;
            } else {
                color[e] = -1;
            }
        } else {
            color[e] = -1;
            tried[depth] = -1;
            --depth;
            if (depth < 0) return std::nullopt;
            color[order[depth]] = -1;
        }
    }

    ThreeEdgeColoring out;
    for (EdgeId e = 0; e < m; ++e) out.classes[color[e]].push_back(e);
    for (auto& cl : out.classes) std::sort(cl.begin(), cl.end());
    return out;
}

CubicCompletion cubic_completion(const Graph& g,
                                 const std::optional<ThreeEdgeColoring>& coloring) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 3) throw std::invalid_argument("max degree exceeds 3");

    CubicCompletion out;
    out.graph = g;
    out.edge_map.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.edge_map[e] = e;

    std::vector<int> edge_color;  // per current-graph edge, -1 = none
    if (coloring) {
        edge_color.assign(g.edge_count(), -1);
        for (int c = 0; c < 3; ++c)
            for (EdgeId e : coloring->classes[c]) edge_color[e] = c;
        for (int c : edge_color)
            if (c < 0) throw std::invalid_argument("coloring does not cover all edges");
    }

    while (true) {
        const Graph& cur = out.graph;
        int n = cur.vertex_count();
        bool regular = true;
        for (VertexId v = 0; v < n && regular; ++v)
            if (cur.degree(v) != 3) regular = false;
        if (regular) break;

        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : cur.edges()) {
            edges.emplace_back(u, v);
            edges.emplace_back(u + n, v + n);
        }
        for (VertexId v = 0; v < n; ++v)
            if (cur.degree(v) < 3) edges.emplace_back(v, v + n);
        Graph doubled(2 * n, edges);

        std::vector<EdgeId> new_map(out.edge_map.size());
        for (size_t i = 0; i < out.edge_map.size(); ++i) {
            auto [u, v] = cur.endpoints(out.edge_map[i]);
            new_map[i] = *doubled.edge_between(u, v);
        }

        if (coloring) {
            std::vector<int> new_color(doubled.edge_count(), -1);
            for (EdgeId e = 0; e < cur.edge_count(); ++e) {
                auto [u, v] = cur.endpoints(e);
                new_color[*doubled.edge_between(u, v)] = edge_color[e];
                new_color[*doubled.edge_between(u + n, v + n)] = edge_color[e];
            }
            for (VertexId v = 0; v < n; ++v) {
                if (cur.degree(v) >= 3) continue;
                int used = 0;
                for (EdgeId e : cur.edges_at(v)) used |= 1 << edge_color[e];
                int c = 0;
                while ((used >> c) & 1) ++c;
                new_color[*doubled.edge_between(v, v + n)] = c;
            }
            edge_color = std::move(new_color);
        }

        out.graph = std::move(doubled);
        out.edge_map = std::move(new_map);
        out.iterations++;
    }

    if (coloring) {
        ThreeEdgeColoring ext;
        for (EdgeId e = 0; e < out.graph.edge_count(); ++e)
            ext.classes[edge_color[e]].push_back(e);
        out.extended_coloring = std::move(ext);
    }
    return out;
}

namespace {

void check_matching(const Graph& g, const std::vector<EdgeId>& m, const char* name) {
    std::vector<char> used(g.vertex_count(), 0);
    for (EdgeId e : m) {
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("invalid edge id");
        auto [u, v] = g.endpoints(e);
        if (used[u] || used[v])
            throw std::invalid_argument(std::string(name) + " is not a matching");
        used[u] = used[v] = 1;
    }
}

}  // namespace

MatchingUnion cycles_of_matching_union(const Graph& g, const std::vector<EdgeId>& m1,
                                       const std::vector<EdgeId>& m2) {
    check_matching(g, m1, "first edge set");
    check_matching(g, m2, "second edge set");
    std::set<EdgeId> s1(m1.begin(), m1.end());
    for (EdgeId e : m2)
        if (s1.count(e)) throw std::invalid_argument("matchings are not disjoint");

    // union graph as incidence: each vertex sees at most one edge per matching
    std::vector<std::array<EdgeId, 2>> at(g.vertex_count(), {-1, -1});
    for (EdgeId e : m1) {
        at[g.endpoints(e).first][0] = e;
        at[g.endpoints(e).second][0] = e;
    }
    for (EdgeId e : m2) {
        at[g.endpoints(e).first][1] = e;
        at[g.endpoints(e).second][1] = e;
    }

    MatchingUnion out;
    std::set<EdgeId> all(m1.begin(), m1.end());
    all.insert(m2.begin(), m2.end());
    std::set<EdgeId> seen;

    auto walk = [&](EdgeId start, int start_side) {
        // follow the alternating trail from `start`, beginning at its lower endpoint
        std::vector<EdgeId> trail;
        VertexId v = g.endpoints(start).first;
        EdgeId e = start;
        int side = start_side;
        while (true) {
            trail.push_back(e);
            seen.insert(e);
            v = g.other_end(e, v);
            EdgeId next = at[v][1 - side];
            if (next < 0 || next == start) return std::make_pair(trail, next == start);
            e = next;
            side = 1 - side;
        }
    };

    for (EdgeId e : all) {
        if (seen.count(e)) continue;
        int side = s1.count(e) ? 0 : 1;
        auto [fwd, closed] = walk(e, side);
        if (closed) {
            out.cycles.push_back(make_cycle_trail(g, fwd));
        } else {
            // open component: extend backwards from the other endpoint of e
            std::vector<EdgeId> trail(fwd.rbegin(), fwd.rend());
            VertexId v = g.endpoints(e).first;
            int cside = side;
            while (true) {
                EdgeId next = at[v][1 - cside];
                if (next < 0) break;
                trail.push_back(next);
                seen.insert(next);
                v = g.other_end(next, v);
                cside = 1 - cside;
            }
            out.paths.push_back(std::move(trail));
        }
    }
    return out;
}

std::vector<EdgeId> MedDecomposition::leaf_path_edges() const {
    std::vector<EdgeId> out;
    for (const auto& s : stars)
        out.insert(out.end(), s.leaves.begin(), s.leaves.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MedViolation> verify_med(const Graph& g, const MedDecomposition& d) {
    std::vector<MedViolation> out;
    auto fail = [&](std::string rule, std::string detail) {
        out.push_back({std::move(rule), std::move(detail)});
    };

    const int m = g.edge_count();
    std::vector<int> owner(m, -1);  // 0 matching, 1 cycles, 2 stars
    auto claim = [&](EdgeId e, int who) {
        if (e < 0 || e >= m) {
            fail("partition", "edge id out of range");
            return;
        }
        if (owner[e] != -1)
            fail("partition", "edge " + std::to_string(e) + " claimed twice");
        owner[e] = who;
    };

    for (EdgeId e : d.matching) claim(e, 0);
    for (const auto& c : d.cycles)
        for (EdgeId e : c.edges) claim(e, 1);
    for (const auto& s : d.stars) {
        claim(s.center, 2);
        for (EdgeId e : s.leaves) claim(e, 2);
    }
    for (EdgeId e = 0; e < m; ++e)
        if (owner[e] == -1)
            fail("partition", "edge " + std::to_string(e) + " unassigned");
    if (!out.empty()) return out;  // structural checks below assume a partition

    // G1 a matching
    {
        std::vector<char> used(g.vertex_count(), 0);
        for (EdgeId e : d.matching) {
            auto [u, v] = g.endpoints(e);
            if (used[u] || used[v]) fail("matching", "two matching edges share a vertex");
            used[u] = used[v] = 1;
        }
    }

    // G2: even, vertex-disjoint cycles
    {
        std::vector<char> on_cycle(g.vertex_count(), 0);
        for (const auto& c : d.cycles) {
            try {
                CycleTrail rebuilt = make_cycle_trail(g, c.edges);
                if (rebuilt.shared != c.shared)
                    fail("cycle", "recorded shared vertices do not match the edges");
            } catch (const std::exception& ex) {
                fail("cycle", ex.what());
                continue;
            }
            if (c.length() % 2 != 0)
                fail("cycle-parity", "odd cycle of length " + std::to_string(c.length()));
            for (VertexId v : c.shared) {
                if (on_cycle[v]) fail("cycle", "cycles share vertex " + std::to_string(v));
                on_cycle[v] = 1;
            }
        }
    }

    // G3: independent, pairwise disjoint double-stars
    {
        std::vector<char> star_vertex(g.vertex_count(), 0);
        std::vector<VertexId> leaf_vertices;
        for (const auto& s : d.stars) {
            auto [u, v] = g.endpoints(s.center);
            std::vector<VertexId> verts = {u, v};
            for (int i = 0; i < 4; ++i) {
                VertexId anchor = i < 2 ? u : v;
                auto [a, b] = g.endpoints(s.leaves[i]);
                if (a != anchor && b != anchor) {
                    fail("double-star", "leaf edge misses its center endpoint");
                    continue;
                }
                VertexId leaf = g.other_end(s.leaves[i], anchor);
                verts.push_back(leaf);
                leaf_vertices.push_back(leaf);
            }
            std::sort(verts.begin(), verts.end());
            if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
                fail("double-star", "star does not span 6 distinct vertices");
            for (VertexId w : verts) {
                if (w >= 0 && w < g.vertex_count()) {
                    if (star_vertex[w]) fail("double-star", "stars share a vertex");
                    star_vertex[w] = 1;
                }
            }
        }
        for (size_t i = 0; i < leaf_vertices.size(); ++i)
            for (size_t j = i + 1; j < leaf_vertices.size(); ++j)
                if (g.adjacent(leaf_vertices[i], leaf_vertices[j]))
                    fail("leaf-independence",
                         "leaves " + std::to_string(leaf_vertices[i]) + " and " +
                             std::to_string(leaf_vertices[j]) + " are adjacent");
    }

    // consequences that hold in the cubic case
    bool cubic = g.vertex_count() > 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) cubic = false;
    if (cubic && out.empty()) {
        std::vector<char> in_matching(g.vertex_count(), 0), in_star(g.vertex_count(), 0),
            on_cycle(g.vertex_count(), 0), on_center(g.vertex_count(), 0);
        for (EdgeId e : d.matching) {
            in_matching[g.endpoints(e).first] = 1;
            in_matching[g.endpoints(e).second] = 1;
        }
        for (const auto& s : d.stars) {
            on_center[g.endpoints(s.center).first] = 1;
            on_center[g.endpoints(s.center).second] = 1;
            in_star[g.endpoints(s.center).first] = 1;
            in_star[g.endpoints(s.center).second] = 1;
            for (EdgeId e : s.leaves) {
                in_star[g.endpoints(e).first] = 1;
                in_star[g.endpoints(e).second] = 1;
            }
        }
        for (const auto& c : d.cycles)
            for (VertexId v : c.shared) on_cycle[v] = 1;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (in_matching[v] && in_star[v])
                fail("matching-star-disjoint",
                     "vertex " + std::to_string(v) + " lies in both G1 and G3");
            if (!on_cycle[v] && !on_center[v])
                fail("vertex-coverage",
                     "vertex " + std::to_string(v) + " is off the cycles and off every center edge");
        }
    }
    return out;
}

void enumerate_hamiltonian_cycles(
    const Graph& g, const std::vector<VertexId>& vertices,
    const std::function<bool(const std::vector<VertexId>&)>& visit) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3) return;
    std::vector<int> index(g.vertex_count(), -1);
    for (int i = 0; i < n; ++i) index[vertices[i]] = i;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (EdgeId e : g.edges_at(vertices[i])) {
            int j = index[g.other_end(e, vertices[i])];
            if (j >= 0) adj[i].push_back(j);
        }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    for (const auto& a : adj)
        if (a.size() < 2) return;

    std::vector<int> path = {0};
    std::vector<char> visited(n, 0);
    visited[0] = 1;
    bool stop = false;

    std::vector<int> reach_stack, reach_mark(n, 0);
    int reach_stamp = 0;

    auto prune = [&](int cur) {
        // all unvisited vertices must be reachable from cur via unvisited ones,
        // and must keep two usable neighbors
        int unvisited = n - static_cast<int>(path.size());
        if (unvisited == 0) return false;
        ++reach_stamp;
        reach_stack.clear();
        int reached = 0;
        for (int w : adj[cur])
            if (!visited[w] && reach_mark[w] != reach_stamp) {
                reach_mark[w] = reach_stamp;
                reach_stack.push_back(w);
                ++reached;
            }
        for (size_t i = 0; i < reach_stack.size(); ++i)
            for (int w : adj[reach_stack[i]])
                if (!visited[w] && reach_mark[w] != reach_stamp) {
                    reach_mark[w] = reach_stamp;
                    reach_stack.push_back(w);
                    ++reached;
                }
        if (reached != unvisited) return true;
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            int usable = 0;
            for (int w : adj[v])
                if (!visited[w] || w == cur || w == 0) ++usable;
            if (usable < 2) return true;
        }
        return false;
    };

    std::function<void()> extend = [&]() {
        if (stop) return;
        int cur = path.back();
        if (static_cast<int>(path.size()) == n) {
            if (std::binary_search(adj[cur].begin(), adj[cur].end(), 0) &&
                path[1] < path.back()) {  // canonical direction
                std::vector<VertexId> cycle(n);
                for (int i = 0; i < n; ++i) cycle[i] = vertices[path[i]];
                if (!visit(cycle)) stop = true;
            }
            return;
        }
        if (prune(cur)) return;
        for (int w : adj[cur]) {
            if (visited[w]) continue;
            visited[w] = 1;
            path.push_back(w);
            extend();
            path.pop_back();
            visited[w] = 0;
            if (stop) return;
        }
    };
    extend();
}

namespace {

std::optional<MedDecomposition> med_from_cycle(const Graph& g, EdgeId center,
                                               const std::vector<VertexId>& cycle) {
    auto [u, w] = g.endpoints(center);
    MedDecomposition d;
    DoubleStar star;
    star.center = center;
    int k = 0;
    for (EdgeId e : g.edges_at(u))
        if (e != center) star.leaves[k++] = e;
    if (k != 2) return std::nullopt;
    for (EdgeId e : g.edges_at(w))
        if (e != center) star.leaves[k++] = e;
    if (k != 4) return std::nullopt;
    d.stars.push_back(star);

    std::vector<EdgeId> cyc_edges;
    for (size_t i = 0; i < cycle.size(); ++i) {
        auto e = g.edge_between(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (!e) return std::nullopt;
        cyc_edges.push_back(*e);
    }
    d.cycles.push_back(make_cycle_trail(g, cyc_edges));

    std::set<EdgeId> used(cyc_edges.begin(), cyc_edges.end());
    used.insert(center);
    used.insert(star.leaves.begin(), star.leaves.end());
    if (used.size() != cyc_edges.size() + 5) return std::nullopt;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!used.count(e)) d.matching.push_back(e);

    if (!verify_med(g, d).empty()) return std::nullopt;
    return d;
}

}  // namespace

std::optional<MedDecomposition> find_med_omitting(const Graph& g, VertexId u,
                                                  VertexId w) {
    auto center = g.edge_between(u, w);
    if (!center) throw std::invalid_argument("removed pair must be adjacent");
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != u && v != w) rest.push_back(v);
    std::optional<MedDecomposition> found;
    enumerate_hamiltonian_cycles(g, rest, [&](const std::vector<VertexId>& cycle) {
        found = med_from_cycle(g, *center, cycle);
        return !found.has_value();  // keep enumerating until one verifies
    });
    return found;
}

std::optional<MedDecomposition> find_med_by_long_cycle(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) throw std::invalid_argument("graph must be 3-regular");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, w] = g.endpoints(e);
        if (auto d = find_med_omitting(g, u, w)) return d;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exhaustive MED search: per-edge labels with propagation.

namespace {

enum Label : int { kUnset = -1, kMatch = 0, kCycle = 1, kCenter = 2, kLeaf = 3 };

struct MedSearcher {
    const Graph& g;
    MedSearchMode mode;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;

    std::vector<int> label;
    std::vector<VertexId> leaf_end;  // for kLeaf edges, the leaf-side endpoint
    std::vector<int> n_match, n_cycle, n_center, n_leafside, n_starside, n_unset;
    std::vector<char> is_leaf_vertex, is_center_end;

    // rollback union-find with parity for cycle edges
    std::vector<int> dsu_parent, dsu_rank, dsu_parity;

    struct Undo {
        enum Kind { kLabel, kCounter, kFlag, kDsu } kind;
        int a = 0, b = 0, c = 0;
    };
    std::vector<Undo> trail;

    explicit MedSearcher(const Graph& graph, MedSearchMode m, long long b)
        : g(graph), mode(m), budget(b) {
        const int me = g.edge_count(), n = g.vertex_count();
        label.assign(me, kUnset);
        leaf_end.assign(me, -1);
        n_match.assign(n, 0);
        n_cycle.assign(n, 0);
        n_center.assign(n, 0);
        n_leafside.assign(n, 0);
        n_starside.assign(n, 0);
        n_unset.assign(n, 0);
        for (VertexId v = 0; v < n; ++v) n_unset[v] = g.degree(v);
        is_leaf_vertex.assign(n, 0);
        is_center_end.assign(n, 0);
        dsu_parent.resize(n);
        for (int i = 0; i < n; ++i) dsu_parent[i] = i;
        dsu_rank.assign(n, 0);
        dsu_parity.assign(n, 0);
    }

    size_t mark() const { return trail.size(); }

    void rollback(size_t to) {
        while (trail.size() > to) {
            Undo u = trail.back();
            trail.pop_back();
            switch (u.kind) {
                case Undo::kLabel:
                    label[u.a] = u.b;
                    leaf_end[u.a] = u.c;
                    break;
                case Undo::kCounter:
                    (*counter_by_id(u.a))[u.b] = u.c;
                    break;
                case Undo::kFlag:
                    (u.a == 0 ? is_leaf_vertex : is_center_end)[u.b] =
                        static_cast<char>(u.c);
                    break;
                case Undo::kDsu:
                    dsu_parent[u.a] = u.a;
                    dsu_rank[u.b] = u.c;
                    break;
            }
        }
    }

    std::vector<int>* counter_by_id(int id) {
        switch (id) {
            case 0: return &n_match;
            case 1: return &n_cycle;
            case 2: return &n_center;
            case 3: return &n_leafside;
            case 4: return &n_starside;
            default: return &n_unset;
        }
    }

    void bump(int id, VertexId v, int delta) {
        auto* c = counter_by_id(id);
        trail.push_back({Undo::kCounter, id, v, (*c)[v]});
        (*c)[v] += delta;
    }

    void set_flag(int which, VertexId v) {
        auto& f = which == 0 ? is_leaf_vertex : is_center_end;
        trail.push_back({Undo::kFlag, which, v, f[v]});
        f[v] = 1;
    }

    std::pair<int, int> dsu_find(int v) {  // (root, parity to root)
        int p = 0;
        while (dsu_parent[v] != v) {
            p ^= dsu_parity[v];
            v = dsu_parent[v];
        }
        return {v, p};
    }

    bool dsu_join(int u, int v) {  // joining via a cycle edge; false on odd closure
        auto [ru, pu] = dsu_find(u);
        auto [rv, pv] = dsu_find(v);
        if (ru == rv) return pu != pv;  // even cycle closes when parities differ
        if (dsu_rank[ru] < dsu_rank[rv]) {
            std::swap(ru, rv);
            std::swap(pu, pv);
        }
        trail.push_back({Undo::kDsu, rv, ru, dsu_rank[ru]});
        dsu_parent[rv] = ru;
        dsu_parity[rv] = pu ^ pv ^ 1;
        if (dsu_rank[ru] == dsu_rank[rv]) dsu_rank[ru]++;
        return true;
    }

    struct Pending {
        EdgeId e;
        int lab;
        VertexId leaf;  // for kLeaf
    };

    // Apply one label plus everything it forces. Returns false on conflict.
    bool assign(EdgeId e0, int lab0, VertexId leaf0) {
        std::vector<Pending> queue = {{e0, lab0, leaf0}};
        while (!queue.empty()) {
            auto [e, lab, leaf] = queue.back();
            queue.pop_back();
            if (label[e] != kUnset) {
                if (label[e] != lab) return false;
                if (lab == kLeaf && leaf_end[e] != leaf) return false;
                continue;
            }
            auto [u, v] = g.endpoints(e);
            trail.push_back({Undo::kLabel, e, label[e], leaf_end[e]});
            label[e] = lab;
            if (lab == kLeaf) leaf_end[e] = leaf;
            bump(5, u, -1);
            bump(5, v, -1);

            switch (lab) {
                case kMatch:
                    for (VertexId w : {u, v}) {
                        if (n_match[w] || is_center_end[w] || n_starside[w]) return false;
                        if (is_leaf_vertex[w] &&
                            !(mode == MedSearchMode::relaxed_subcubic && g.degree(w) == 2))
                            return false;
                        bump(0, w, 1);
                    }
                    // remaining edges at a cubic matched vertex must be cycle
                    // edges; at a relaxed degree-2 vertex the other edge can
                    // only be a leaf edge hanging off it
                    for (VertexId w : {u, v}) {
                        if (g.degree(w) == 3) {
                            for (EdgeId f : g.edges_at(w))
                                if (f != e && label[f] == kUnset)
                                    queue.push_back({f, kCycle, -1});
                        } else if (g.degree(w) == 2 &&
                                   mode == MedSearchMode::relaxed_subcubic) {
                            for (EdgeId f : g.edges_at(w))
                                if (f != e && label[f] == kUnset)
                                    queue.push_back({f, kLeaf, w});
                        }
                    }
                    break;
                case kCycle:
                    for (VertexId w : {u, v}) {
                        if (n_cycle[w] >= 2 || is_center_end[w] || n_starside[w]) return false;
                        bump(1, w, 1);
                    }
                    if (!dsu_join(u, v)) return false;
                    break;
                case kCenter:
                    for (VertexId w : {u, v}) {
                        if (g.degree(w) != 3) return false;  // center endpoints need 2 leaves
                        if (n_match[w] || n_cycle[w] || n_center[w] || is_leaf_vertex[w])
                            return false;
                        bump(2, w, 1);
                        set_flag(1, w);
                    }
                    for (VertexId w : {u, v})
                        for (EdgeId f : g.edges_at(w))
                            if (f != e) queue.push_back({f, kLeaf, g.other_end(f, w)});
                    break;
                case kLeaf: {
                    VertexId star_side = g.other_end(e, leaf);
                    if (is_leaf_vertex[leaf] || is_center_end[leaf]) return false;
                    if (n_match[leaf] &&
                        !(mode == MedSearchMode::relaxed_subcubic && g.degree(leaf) == 2))
                        return false;
                    // leaves of all stars form an independent set
                    for (EdgeId f : g.edges_at(leaf))
                        if (is_leaf_vertex[g.other_end(f, leaf)]) return false;
                    set_flag(0, leaf);
                    bump(3, leaf, 1);
                    if (n_match[star_side] || n_cycle[star_side] ||
                        is_leaf_vertex[star_side] || n_starside[star_side] >= 2)
                        return false;
                    bump(4, star_side, 1);
                    if (g.degree(leaf) == 3) {
                        for (EdgeId f : g.edges_at(leaf))
                            if (f != e && label[f] == kUnset) queue.push_back({f, kCycle, -1});
                    } else if (g.degree(leaf) == 2) {
                        for (EdgeId f : g.edges_at(leaf))
                            if (f != e && label[f] == kUnset) queue.push_back({f, kMatch, -1});
                    }
                    // the star side needs its center edge among the other two edges
                    if (n_starside[star_side] == 2 && !n_center[star_side]) {
                        for (EdgeId f : g.edges_at(star_side))
                            if (label[f] == kUnset) queue.push_back({f, kCenter, -1});
                    }
                    break;
                }
                default:
                    return false;
            }

            // completed vertices must land on a valid profile
            for (VertexId w : {u, v})
                if (n_unset[w] == 0 && !vertex_complete_ok(w)) return false;
        }
        return true;
    }

    bool vertex_complete_ok(VertexId w) const {
        int deg = g.degree(w);
        int m = n_match[w], c = n_cycle[w], ce = n_center[w], lf = n_leafside[w],
            st = n_starside[w];
        if (deg == 3) {
            if (m == 1 && c == 2 && !ce && !lf && !st) return true;
            if (lf == 1 && c == 2 && !m && !ce && !st) return true;
            if (ce == 1 && st == 2 && !m && !c && !lf) return true;
            return false;
        }
        if (mode != MedSearchMode::relaxed_subcubic) return false;
        if (deg == 2)
            return (c == 2 && !m && !ce && !lf && !st) ||
                   (m == 1 && lf == 1 && !c && !ce && !st);
        if (deg == 1) return (m == 1) != (lf == 1);
        return deg == 0;
    }

    bool search(std::optional<MedDecomposition>& result) {
        EdgeId next = -1;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (label[e] == kUnset) {
                next = e;
                break;
            }
        if (next < 0) {
            auto d = extract();
            if (d && verify_med(g, *d).empty()) {
                result = std::move(d);
                return true;
            }
            return false;
        }

        auto try_branch = [&](int lab, VertexId leaf, EdgeId target) {
            if (budget > 0 && nodes >= budget) {
                out_of_budget = true;
                return false;
            }
            ++nodes;
            size_t m0 = mark();
            bool ok = assign(target, lab, leaf) && search(result);
            if (!ok) rollback(m0);
            return ok;
        };

        // label order: matching < cycle < center < leaf
        for (int lab : {kMatch, kCycle, kCenter}) {
            if (try_branch(lab, -1, next)) return true;
            if (out_of_budget) return false;
        }
        // leaf branches: pick the star side and its center edge explicitly
        auto [u, v] = g.endpoints(next);
        for (VertexId leaf : {v, u}) {
            VertexId star_side = leaf == v ? u : v;
            for (EdgeId f : g.edges_at(star_side)) {
                if (f == next || label[f] != kUnset) continue;
                size_t m0 = mark();
                if (budget > 0 && nodes >= budget) {
                    out_of_budget = true;
                    return false;
                }
                ++nodes;
                bool ok = assign(next, kLeaf, leaf) && assign(f, kCenter, -1) &&
                          search(result);
                if (ok) return true;
                rollback(m0);
                if (out_of_budget) return false;
            }
        }
        return false;
    }

    std::optional<MedDecomposition> extract() const {
        MedDecomposition d;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (label[e] == kMatch) d.matching.push_back(e);
        // cycles: walk components of cycle-labeled edges
        std::vector<char> seen(g.edge_count(), 0);
        for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
            if (label[e0] != kCycle || seen[e0]) continue;
            std::vector<EdgeId> cyc = {e0};
            seen[e0] = 1;
            VertexId start = g.endpoints(e0).first;
            VertexId at = g.endpoints(e0).second;
            EdgeId cur = e0;
            while (at != start) {
                EdgeId nxt = -1;
                for (EdgeId f : g.edges_at(at))
                    if (f != cur && label[f] == kCycle) nxt = f;
                if (nxt < 0) return std::nullopt;  // dangling path
                cyc.push_back(nxt);
                seen[nxt] = 1;
                at = g.other_end(nxt, at);
                cur = nxt;
            }
            d.cycles.push_back(make_cycle_trail(g, cyc));
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (label[e] != kCenter) continue;
            DoubleStar s;
            s.center = e;
            int k = 0;
            auto [u, v] = g.endpoints(e);
            for (VertexId w : {u, v})
                for (EdgeId f : g.edges_at(w))
                    if (f != e) {
                        if (label[f] != kLeaf || k >= 4) return std::nullopt;
                        s.leaves[k++] = f;
                    }
            if (k != 4) return std::nullopt;
            d.stars.push_back(s);
        }
        return d;
    }
};

}  // namespace

MedSearchResult find_med_exhaustive(const Graph& g, long long node_budget,
                                    MedSearchMode mode) {
    if (mode == MedSearchMode::strict_cubic) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) != 3)
                throw std::invalid_argument(
                    "strict mode requires a 3-regular graph; use relaxed_subcubic");
    } else {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 3) throw std::invalid_argument("max degree exceeds 3");
    }
    MedSearcher searcher(g, mode, node_budget);
    MedSearchResult res;
    res.mode = mode;
    std::optional<MedDecomposition> found;
    bool ok = searcher.search(found);
    res.nodes = searcher.nodes;
    if (ok) {
        res.verdict = MedSearchResult::Verdict::found;
        res.decomposition = std::move(found);
    } else if (searcher.out_of_budget) {
        res.verdict = MedSearchResult::Verdict::budget_exceeded;
    } else {
        res.verdict = MedSearchResult::Verdict::none;
    }
    return res;
}

}  // namespace choose72
