#include "choose72/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace choose72 {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list,
             bool require_max_degree3)
    : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("parallel edge");
    edges_ = std::move(edge_list);
    vertex_edges_.assign(n_, {});
    for (EdgeId e = 0; e < edge_count(); ++e) {
        vertex_edges_[edges_[e].first].push_back(e);
        vertex_edges_[edges_[e].second].push_back(e);
    }
    if (require_max_degree3) {
        for (VertexId v = 0; v < n_; ++v)
            if (degree(v) > 3) throw std::invalid_argument("vertex degree exceeds 3");
    }
    edge_neighbors_.resize(edge_count());
    for (EdgeId e = 0; e < edge_count(); ++e) {
        auto& out = edge_neighbors_[e];
        auto [u, v] = edges_[e];
        for (EdgeId f : vertex_edges_[u])
            if (f != e) out.push_back(f);
        for (EdgeId f : vertex_edges_[v])
            if (f != e) out.push_back(f);
        std::sort(out.begin(), out.end());
    }
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    return edge_between(u, v).has_value();
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it != edges_.end() && *it == std::make_pair(u, v))
        return static_cast<EdgeId>(it - edges_.begin());
    return std::nullopt;
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
    auto [a, b] = edges_[e];
    if (v == a) return b;
    if (v == b) return a;
    throw std::invalid_argument("vertex not on edge");
}

std::optional<VertexId> Graph::shared_vertex(EdgeId e, EdgeId f) const {
    auto [a, b] = edges_[e];
    auto [c, d] = edges_[f];
    if (e == f) return std::nullopt;
    if (a == c || a == d) return a;
    if (b == c || b == d) return b;
    return std::nullopt;
}

const std::vector<EdgeId>& Graph::incident_edges(EdgeId e) const {
    if (e < 0 || e >= edge_count()) throw std::invalid_argument("invalid edge id");
    return edge_neighbors_[e];
}

CycleTrail make_cycle_trail(const Graph& g, const std::vector<EdgeId>& cyclic_edges) {
    const int k = static_cast<int>(cyclic_edges.size());
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 edges");
    {
        auto sorted = cyclic_edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("repeated edge in cycle");
    }
    CycleTrail trail;
    trail.edges = cyclic_edges;
    trail.shared.resize(k);
    std::vector<char> seen_vertex;
    for (int i = 0; i < k; ++i) {
        auto s = g.shared_vertex(cyclic_edges[i], cyclic_edges[(i + 1) % k]);
        if (!s) throw std::invalid_argument("consecutive cycle edges do not touch");
        trail.shared[i] = *s;
    }
    // a simple cycle visits each vertex once
    std::vector<VertexId> verts = trail.shared;
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("cycle revisits a vertex");
    return trail;
}

namespace {

struct DfsState {
    std::vector<int> disc, low, parent;
    int timer = 0;
    int bridges = 0;
    bool articulation = false;
};

// iterative lowlink pass computing bridges and articulation vertices
void lowlink(const Graph& g, VertexId root, DfsState& st) {
    struct Frame {
        VertexId v;
        size_t next_edge;
        int child_count;
    };
    std::vector<Frame> stack;
    st.disc[root] = st.low[root] = st.timer++;
    stack.push_back({root, 0, 0});
    while (!stack.empty()) {
        Frame& fr = stack.back();
        VertexId v = fr.v;
        if (fr.next_edge < g.edges_at(v).size()) {
            EdgeId e = g.edges_at(v)[fr.next_edge++];
            VertexId w = g.other_end(e, v);
            if (st.disc[w] < 0) {
                st.parent[w] = static_cast<int>(e);
                fr.child_count++;
                st.disc[w] = st.low[w] = st.timer++;
                stack.push_back({w, 0, 0});
            } else if (st.parent[v] != static_cast<int>(e)) {
                st.low[v] = std::min(st.low[v], st.disc[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                VertexId p = stack.back().v;
                st.low[p] = std::min(st.low[p], st.low[v]);
                if (st.low[v] > st.disc[p]) st.bridges++;
                if (st.parent[p] >= 0 && st.low[v] >= st.disc[p]) st.articulation = true;
            } else if (fr.child_count > 1) {
                st.articulation = true;  // root with two dfs children
            }
        }
    }
}

std::optional<int> compute_girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    const int n = g.vertex_count();
    std::vector<int> dist(n), parent_edge(n);
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::queue<VertexId> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            if (2 * dist[v] >= best) break;
            for (EdgeId e : g.edges_at(v)) {
                if (e == parent_edge[v]) continue;
                VertexId w = g.other_end(e, v);
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent_edge[w] = e;
                    q.push(w);
                } else {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

}  // namespace

StructureReport structure_checks(const Graph& g) {
    StructureReport rep;
    const int n = g.vertex_count();
    rep.subcubic = true;
    rep.cubic = n > 0;
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) != 3) rep.cubic = false;
        if (g.degree(v) > 3) rep.subcubic = false;
    }

    DfsState st;
    st.disc.assign(n, -1);
    st.low.assign(n, -1);
    st.parent.assign(n, -1);
    int components = 0;
    for (VertexId v = 0; v < n; ++v)
        if (st.disc[v] < 0) {
            components++;
            lowlink(g, v, st);
        }
    rep.connected = components <= 1;
    rep.bridge_count = st.bridges;
    rep.two_connected = rep.connected && n >= 3 && !st.articulation;
    rep.girth = compute_girth(g);
    return rep;
}

namespace {

constexpr int kG6Min = 63;
constexpr int kG6Max = 126;

int g6_byte(char c) {
    int b = static_cast<unsigned char>(c);
    if (b < kG6Min || b > kG6Max) throw std::invalid_argument("graph6: byte out of range");
    return b - kG6Min;
}

}  // namespace

Graph parse_graph6(const std::string& line, bool enforce_max_degree3) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    if (s[0] == ':' || s[0] == ';' || s[0] == '&')
        throw std::invalid_argument("graph6: sparse6/digraph6 not supported");

    size_t pos = 0;
    long long n = 0;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("graph6: vertex count beyond 2^18 not supported");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated header");
        n = (static_cast<long long>(g6_byte(s[1])) << 12) |
            (static_cast<long long>(g6_byte(s[2])) << 6) | g6_byte(s[3]);
        pos = 4;
    } else {
        n = g6_byte(s[0]);
        pos = 1;
    }

    const long long bits = n * (n - 1) / 2;
    const long long nbytes = (bits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != nbytes)
        throw std::invalid_argument("graph6: body length mismatch");

    std::vector<std::pair<int, int>> edge_list;
    long long t = 0;
    int i = 0, j = 1;
    for (long long b = 0; b < nbytes; ++b) {
        int v = g6_byte(s[pos + b]);
        for (int bit = 5; bit >= 0; --bit, ++t) {
            bool on = (v >> bit) & 1;
            if (t >= bits) {
                if (on) throw std::invalid_argument("graph6: nonzero padding");
                continue;
            }
            if (on) edge_list.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph(static_cast<int>(n), std::move(edge_list), enforce_max_degree3);
}

std::string encode_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Min + n));
    } else if (n < (1 << 18)) {
        out.push_back('~');
        out.push_back(static_cast<char>(kG6Min + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kG6Min + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kG6Min + (n & 63)));
    } else {
        throw std::invalid_argument("graph6: vertex count beyond 2^18 not supported");
    }
    const long long bits = n * (n - 1) / 2;
    int acc = 0, nb = 0;
    long long t = 0;
    int i = 0, j = 1;
    while (t < bits) {
        acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
        if (++nb == 6) {
            out.push_back(static_cast<char>(kG6Min + acc));
            acc = 0;
            nb = 0;
        }
        ++t;
        if (++i == j) {
            i = 0;
            ++j;
        }
    }
    if (nb > 0) out.push_back(static_cast<char>(kG6Min + (acc << (6 - nb))));
    return out;
}

Graph generate_petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);   // outer cycle
        e.emplace_back(i, i + 5);         // spokes
    }
    // inner pentagram 5-7-9-6-8-5
    e.emplace_back(5, 7);
    e.emplace_back(7, 9);
    e.emplace_back(9, 6);
    e.emplace_back(6, 8);
    e.emplace_back(8, 5);
    return Graph(10, std::move(e));
}

Graph generate_flower_snark(int k) {
    if (k < 5 || k % 2 == 0) throw std::invalid_argument("flower snark needs odd k >= 5");
    // vertex layout: w_i = i-1, x_i = k+i-1, y_i = 2k+i-1, z_i = 3k+i-1 (1-based i)
    auto w = [&](int i) { return i - 1; };
    auto x = [&](int i) { return k + i - 1; };
    auto y = [&](int i) { return 2 * k + i - 1; };
    auto z = [&](int i) { return 3 * k + i - 1; };
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) {
        e.emplace_back(z(i), z(i % k + 1));
        e.emplace_back(w(i), x(i));
        e.emplace_back(w(i), y(i));
        e.emplace_back(w(i), z(i));
    }
    for (int i = 1; i < k; ++i) {
        e.emplace_back(x(i), x(i + 1));
        e.emplace_back(y(i), y(i + 1));
    }
    e.emplace_back(x(k), y(1));
    e.emplace_back(y(k), x(1));
    return Graph(4 * k, std::move(e));
}

namespace {

// K4 on {base..base+3} with the edge {base+2, base+3} subdivided by base+4
void append_subdivided_k4(std::vector<std::pair<int, int>>& e, int base) {
    e.emplace_back(base + 0, base + 1);
    e.emplace_back(base + 0, base + 2);
    e.emplace_back(base + 0, base + 3);
    e.emplace_back(base + 1, base + 2);
    e.emplace_back(base + 1, base + 3);
    e.emplace_back(base + 2, base + 4);
    e.emplace_back(base + 3, base + 4);
}

}  // namespace

Graph generate_gstar() {
    std::vector<std::pair<int, int>> e;
    for (int c = 0; c < 3; ++c) append_subdivided_k4(e, 5 * c);
    for (int c = 0; c < 3; ++c) e.emplace_back(5 * c + 4, 15);
    return Graph(16, std::move(e));
}

GstarLayout gstar_layout() {
    Graph g = generate_gstar();
    GstarLayout layout;
    layout.hub = 15;
    for (int c = 0; c < 3; ++c) {
        int b = 5 * c;
        GstarPiece& p = layout.piece[c];
        p.pendant = *g.edge_between(b + 4, 15);
        p.fork[0] = *g.edge_between(b + 2, b + 4);
        p.fork[1] = *g.edge_between(b + 3, b + 4);
        p.opposite = *g.edge_between(b + 0, b + 1);
        // 4-cycle (b+1, b+2, b+0, b+3) in order; first two edges meet fork[0]
        p.quad[0] = *g.edge_between(b + 1, b + 2);
        p.quad[1] = *g.edge_between(b + 0, b + 2);
        p.quad[2] = *g.edge_between(b + 0, b + 3);
        p.quad[3] = *g.edge_between(b + 1, b + 3);
    }
    return layout;
}

Graph generate_two_k4_gadget() {
    std::vector<std::pair<int, int>> e;
    append_subdivided_k4(e, 0);
    append_subdivided_k4(e, 5);
    e.emplace_back(4, 9);
    return Graph(10, std::move(e));
}

Graph generate_even_cycle(int len) {
    if (len < 4 || len % 2 != 0) throw std::invalid_argument("even cycle needs even length >= 4");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < len; ++i) e.emplace_back(i, (i + 1) % len);
    return Graph(len, std::move(e));
}

}  // namespace choose72
