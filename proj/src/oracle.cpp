#include "choose72/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace choose72 {

namespace {

int popcount64(uint64_t x) { return __builtin_popcountll(x); }

// maximum matching in a general graph (blossom contraction); inputs here are
// tiny, so the classic O(V^3) routine is plenty
class BlossomMatcher {
public:
    explicit BlossomMatcher(int n) : n_(n), adj_(n) {}

    void add_edge(int u, int v) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    int solve() {
        match_.assign(n_, -1);
        int res = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0 && find_path(v)) ++res;
        return res;
    }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, p_, base_;
    std::vector<char> used_, blossom_;

    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = p_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = p_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    bool find_path(int root) {
        used_.assign(n_, 0);
        p_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::vector<int> queue = {root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && p_[match_[to]] >= 0)) {
                    int curbase = lca(v, to);
                    blossom_.assign(n_, 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = curbase;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (p_[to] < 0) {
                    p_[to] = v;
                    if (match_[to] < 0) {
                        for (int u = to; u >= 0;) {
                            int pv = p_[u], ppv = match_[pv];
                            match_[u] = pv;
                            match_[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used_[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return false;
    }
};

struct Searcher {
    const Graph& g;
    int s;
    int colors;                      // dense color count
    std::vector<int> color_value;    // dense id -> original color
    std::vector<uint64_t> avail;     // per edge, colors not yet blocked
    std::vector<uint64_t> chosen;    // per edge
    std::vector<int> chosen_count;
    std::vector<std::vector<EdgeId>> nbrs;
    long long nodes = 0;
    long long budget;  // 0 = unlimited
    bool out_of_budget = false;

    Searcher(const Graph& graph, int mult, long long node_budget)
        : g(graph), s(mult), budget(node_budget) {
        nbrs.resize(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) nbrs[e] = g.incident_edges(e);
        avail.assign(g.edge_count(), 0);
        chosen.assign(g.edge_count(), 0);
        chosen_count.assign(g.edge_count(), 0);
    }

    // capacity bound: each color can serve at most a matching of the edges
    // that still admit it; together they must cover the remaining slots
    bool capacity_ok() const {
        long long needed = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) needed += s - chosen_count[e];
        if (needed == 0) return true;
        long long cap = 0;
        for (int c = 0; c < colors && cap < needed; ++c) {
            BlossomMatcher matcher(g.vertex_count());
            bool any = false;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (chosen_count[e] < s && (avail[e] >> c) & 1) {
                    matcher.add_edge(g.endpoints(e).first, g.endpoints(e).second);
                    any = true;
                }
            if (any) cap += matcher.solve();
        }
        return cap >= needed;
    }

    bool solve() {
        // most-constrained uncolored edge, smallest id on ties
        EdgeId best = -1;
        int best_options = 1 << 30;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (chosen_count[e] == s) continue;
            int options = popcount64(avail[e]);
            if (options < s) return false;
            if (options < best_options) {
                best_options = options;
                best = e;
            }
        }
        if (best < 0) return true;
        if (!capacity_ok()) return false;

        std::vector<int> pool;
        for (int c = 0; c < colors; ++c)
            if ((avail[best] >> c) & 1) pool.push_back(c);
        std::vector<int> pick(s);
        return enumerate_subsets(best, pool, pick, 0, 0);
    }

    bool enumerate_subsets(EdgeId e, const std::vector<int>& pool,
                           std::vector<int>& pick, int depth, int from) {
        if (depth == s) return try_subset(e, pick);
        for (int i = from; i + (s - depth - 1) < static_cast<int>(pool.size()); ++i) {
            pick[depth] = pool[i];
            if (enumerate_subsets(e, pool, pick, depth + 1, i + 1)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }

    bool try_subset(EdgeId e, const std::vector<int>& pick) {
        if (budget > 0 && nodes >= budget) {
            out_of_budget = true;
            return false;
        }
        ++nodes;
        uint64_t mask = 0;
        for (int c : pick) mask |= 1ull << c;
        uint64_t saved_chosen = chosen[e];
        int saved_count = chosen_count[e];
        std::vector<std::pair<EdgeId, uint64_t>> undo;
        chosen[e] = mask;
        chosen_count[e] = s;
        undo.emplace_back(e, avail[e]);
        avail[e] &= ~mask;
        for (EdgeId f : nbrs[e]) {
            undo.emplace_back(f, avail[f]);
            avail[f] &= ~mask;
        }
        if (solve()) return true;
        for (auto& [f, m] : undo) avail[f] = m;
        chosen[e] = saved_chosen;
        chosen_count[e] = saved_count;
        return false;
    }

    SetColoring extract() const {
        SetColoring phi = SetColoring::empty_for(g, s);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (int c = 0; c < colors; ++c)
                if ((chosen[e] >> c) & 1) phi.chosen[e].insert(color_value[c]);
        return phi;
    }
};

}  // namespace

OracleResult brute_force_choose(const Graph& g, const ListAssignment& L, int s,
                                long long node_budget) {
    if (s < 1) throw std::invalid_argument("multiplicity must be positive");
    if (L.edge_count() != g.edge_count())
        throw std::invalid_argument("assignment does not match the graph");
    std::map<int, int> dense;
    for (const auto& l : L.lists)
        for (int c : l.values) dense.try_emplace(c, 0);
    if (dense.size() > 64)
        throw std::invalid_argument("more than 64 distinct colors");
    {
        int next = 0;
        for (auto& [c, id] : dense) id = next++;
    }

    Searcher search(g, s, node_budget);
    search.colors = static_cast<int>(dense.size());
    search.color_value.resize(dense.size());
    for (auto& [c, id] : dense) search.color_value[id] = c;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (int c : L.at(e).values) search.avail[e] |= 1ull << dense[c];

    OracleResult res;
    bool found = search.solve();
    res.nodes = search.nodes;
    if (found) {
        res.verdict = OracleResult::Verdict::yes;
        res.witness = search.extract();
    } else if (search.out_of_budget) {
        res.verdict = OracleResult::Verdict::budget_exceeded;
    } else {
        res.verdict = OracleResult::Verdict::no;
    }
    return res;
}

namespace {

ListAssignment full_palette_assignment(const Graph& g, int r) {
    ListAssignment L;
    L.lists.assign(g.edge_count(), ColorSet::range(0, r));
    return L;
}

}  // namespace

OracleResult brute_force_rs_colorable(const Graph& g, int r, int s,
                                      long long node_budget) {
    if (s > r) throw std::invalid_argument("multiplicity exceeds palette");
    if (g.edge_count() == 0)
        return {OracleResult::Verdict::yes, SetColoring::empty_for(g, s), 0};

    ListAssignment L = full_palette_assignment(g, r);
    // all lists identical: the first edge may be fixed to {0..s-1}
    Searcher search(g, s, node_budget);
    search.colors = r;
    search.color_value.resize(r);
    std::iota(search.color_value.begin(), search.color_value.end(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) search.avail[e] = (1ull << r) - 1;

    std::vector<int> first(s);
    std::iota(first.begin(), first.end(), 0);
    OracleResult res;
    bool found = search.try_subset(0, first);
    res.nodes = search.nodes;
    if (found) {
        res.verdict = OracleResult::Verdict::yes;
        res.witness = search.extract();
    } else if (search.out_of_budget) {
        res.verdict = OracleResult::Verdict::budget_exceeded;
    } else {
        res.verdict = OracleResult::Verdict::no;
    }
    return res;
}

OracleResult brute_force_rs_colorable_parallel(const Graph& g, int r, int s,
                                               long long node_budget) {
    if (s > r) throw std::invalid_argument("multiplicity exceeds palette");
    if (g.edge_count() < 2) return brute_force_rs_colorable(g, r, s, node_budget);

    // fix edge 0 to {0..s-1}, then fan the second edge's subsets out to threads
    std::vector<std::vector<int>> tasks;
    {
        ListAssignment L = full_palette_assignment(g, r);
        SetColoring base = SetColoring::empty_for(g, s);
        for (int c = 0; c < s; ++c) base.chosen[0].insert(c);
        ColorSet wide = remaining_list(g, L, base, 1);
        std::vector<int> pool = wide.values;
        std::vector<int> pick(s);
        std::function<void(int, int)> emit = [&](int depth, int from) {
            if (depth == s) {
                tasks.push_back(pick);
                return;
            }
            for (int i = from; i + (s - depth - 1) < static_cast<int>(pool.size()); ++i) {
                pick[depth] = pool[i];
                emit(depth + 1, i + 1);
            }
        };
        emit(0, 0);
    }

    bool found = false;
    long long total_nodes = 1;  // the shared root assignment
    bool any_budget = false;
    SetColoring witness;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total_nodes) \
    reduction(|| : any_budget)
#endif
    for (size_t t = 0; t < tasks.size(); ++t) {
        bool skip;
#ifdef _OPENMP
#pragma omp atomic read
        skip = found;
#else
        skip = found;
#endif
        if (skip) continue;
        Searcher search(g, s, node_budget);
        search.colors = r;
        search.color_value.resize(r);
        std::iota(search.color_value.begin(), search.color_value.end(), 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e) search.avail[e] = (1ull << r) - 1;
        uint64_t first_mask = (1ull << s) - 1;
        search.chosen[0] = first_mask;
        search.chosen_count[0] = s;
        search.avail[0] &= ~first_mask;
        for (EdgeId f : search.nbrs[0]) search.avail[f] &= ~first_mask;
        bool ok = search.try_subset(1, tasks[t]);
        total_nodes += search.nodes;
        any_budget = any_budget || search.out_of_budget;
        if (ok) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                if (!found) {
                    found = true;
                    witness = search.extract();
                }
            }
        }
    }

    OracleResult res;
    res.nodes = total_nodes;
    if (found) {
        res.verdict = OracleResult::Verdict::yes;
        res.witness = std::move(witness);
    } else if (any_budget) {
        res.verdict = OracleResult::Verdict::budget_exceeded;
    } else {
        res.verdict = OracleResult::Verdict::no;
    }
    return res;
}

ChoosabilityResult exhaustive_choosability_check(const Graph& g, int r, int s,
                                                 int palette,
                                                 long long node_budget) {
    if (palette > 8) throw std::invalid_argument("palette too large for enumeration");
    if (r > palette) throw std::invalid_argument("list size exceeds palette");
    const int m = g.edge_count();

    // all r-subsets of the palette as bitmasks, ascending
    std::vector<uint64_t> subsets;
    for (uint64_t mask = 0; mask < (1ull << palette); ++mask)
        if (popcount64(mask) == r) subsets.push_back(mask);

    // palette permutations as mask lookup tables
    std::vector<std::array<uint16_t, 256>> perm_lut;
    {
        std::vector<int> perm(palette);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::array<uint16_t, 256> lut{};
            for (int mask = 0; mask < (1 << palette); ++mask) {
                uint16_t out = 0;
                for (int c = 0; c < palette; ++c)
                    if ((mask >> c) & 1) out |= 1 << perm[c];
                lut[mask] = out;
            }
            perm_lut.push_back(lut);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    auto canonical = [&](const std::vector<uint64_t>& masks) {
        for (const auto& lut : perm_lut) {
            for (int e = 0; e < m; ++e) {
                uint16_t img = lut[masks[e]];
                if (img < masks[e]) return false;  // a smaller orbit member exists
                if (img > masks[e]) break;
            }
        }
        return true;
    };

    ChoosabilityResult res;
    res.verdict = OracleResult::Verdict::yes;
    std::vector<int> idx(m, 0);
    std::vector<uint64_t> masks(m);
    while (true) {
        for (int e = 0; e < m; ++e) masks[e] = subsets[idx[e]];
        if (canonical(masks)) {
            ListAssignment L;
            L.lists.resize(m);
            for (int e = 0; e < m; ++e)
                for (int c = 0; c < palette; ++c)
                    if ((masks[e] >> c) & 1) L.at(e).insert(c);
            OracleResult one = brute_force_choose(g, L, s, node_budget);
            res.assignments_checked++;
            res.nodes += one.nodes;
            if (one.verdict == OracleResult::Verdict::budget_exceeded) {
                res.verdict = OracleResult::Verdict::budget_exceeded;
                return res;
            }
            if (one.verdict == OracleResult::Verdict::no) {
                res.verdict = OracleResult::Verdict::no;
                res.counterexample = std::move(L);
                return res;
            }
        }
        int e = m - 1;
        while (e >= 0 && idx[e] + 1 == static_cast<int>(subsets.size())) idx[e--] = 0;
        if (e < 0) break;
        idx[e]++;
    }
    return res;
}

}  // namespace choose72
