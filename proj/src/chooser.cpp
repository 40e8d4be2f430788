#include "choose72/chooser.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "chooser_internal.hpp"

namespace choose72 {

void ChooserState::log(std::string step, EdgeId e, int color, std::string note) {
    trace.push_back({std::move(step), e, color, std::move(note)});
}

void ChooserState::choose(EdgeId e, int color) {
    phi.chosen[e].insert(color);
    work.at(e).erase(color);
    for (EdgeId f : graph->incident_edges(e)) work.at(f).erase(color);
}

namespace detail {

void forced_remove(ColorSet& set, int c) {
    if (!set.erase(c)) set.erase_largest();
}

int pick_preferring(const ColorSet& from, const ColorSet& avoid) {
    if (avoid.empty()) return from.smallest();
    ColorSet good = from.set_minus(avoid);
    return good.empty() ? from.smallest() : good.smallest();
}

std::optional<std::string> check_walk_preconditions(const ChooserState& st,
                                                    const CycleFrame& frame) {
    const int k = static_cast<int>(frame.targets.size());
    if (k < 3 || frame.guards.size() != frame.targets.size())
        return "malformed frame";
    const Graph& g = *st.graph;
    for (int i = 0; i < k; ++i) {
        auto v = g.shared_vertex(frame.targets[i], frame.targets[(i + 1) % k]);
        if (!v) return "consecutive targets do not touch";
        auto [a, b] = g.endpoints(frame.guards[i]);
        if (a != *v && b != *v) return "guard misses the shared vertex";
    }
    const ColorSet& wb = st.work.at(frame.guards[0]);
    const ColorSet& wa = st.work.at(frame.targets[0]);
    bool start_ok = !wb.subset_of(wa) ||
                    (st.kind[frame.guards[0]] == ChooserState::Kind::leaf &&
                     wb.size() < wa.size());
    if (!start_ok) return "start condition fails";
    for (int i = 0; i < k; ++i) {
        EdgeId b = frame.guards[i], a = frame.targets[i];
        if (st.kind[b] != ChooserState::Kind::leaf &&
            st.work.at(b).size() < st.work.at(a).size())
            return "size hypothesis fails at position " + std::to_string(i);
    }
    return std::nullopt;
}

namespace {

void apply_walk_choice(ChooserState& st, const CycleFrame& frame, int i, int c) {
    const Graph& g = *st.graph;
    const int k = static_cast<int>(frame.targets.size());
    EdgeId a = frame.targets[i];
    EdgeId b = frame.guards[i];
    EdgeId a_next = frame.targets[(i + 1) % k];

    st.phi.chosen[b].insert(c);
    st.work.at(b).erase(c);
    st.work.at(a).erase(c);  // a no-op exactly when the choice saved on a
    if (i + 1 < k)
        forced_remove(st.work.at(a_next), c);  // keeps the size hypothesis alive
    else
        st.work.at(a_next).erase(c);  // the walk closes; nothing left to protect

    VertexId near = *g.shared_vertex(a, b);
    VertexId far = g.other_end(b, near);
    for (EdgeId f : g.edges_at(far)) {
        if (f == b) continue;
        if (st.kind[f] == ChooserState::Kind::cycle)
            forced_remove(st.work.at(f), c);
        else
            st.work.at(f).erase(c);
    }
}

}  // namespace

std::optional<std::string> walk_cycle(ChooserState& st, const CycleFrame& frame,
                                      const WalkOptions& opt) {
    const int k = static_cast<int>(frame.targets.size());
    for (int i = 0; i < k; ++i) {
        EdgeId a = frame.targets[i];
        EdgeId b = frame.guards[i];
        const ColorSet& wa = st.work.at(a);
        const ColorSet& wb = st.work.at(b);
        int c;
        bool saved;
        if (opt.forced_first && i == 0) {
            c = *opt.forced_first;
            if (!wb.contains(c)) return "forced color unavailable on its guard";
            if (wa.contains(c)) return "forced color fails to save";
            saved = true;
        } else {
            ColorSet diff = wb.set_minus(wa);
            if (!diff.empty()) {
                c = pick_preferring(diff, opt.avoid);
                saved = true;
            } else {
                if (st.kind[b] != ChooserState::Kind::leaf)
                    return "guard " + std::to_string(b) + " cannot save on edge " +
                           std::to_string(a);
                // only the second colored edge of a leaf pair can fail to
                // save: an untouched leaf still holds all seven colors
                if (st.phi.chosen[st.leaf_sibling[b]].empty())
                    return "first leaf edge " + std::to_string(b) +
                           " unexpectedly failed to save";
                // center-edge refinement before conceding the target as needy
                EdgeId center = st.leaf_center[b];
                if (st.work.at(center).size() <= 5) {
                    ColorSet pick = wb.set_minus(st.work.at(center));
                    if (pick.empty())
                        return "sponsor " + std::to_string(b) +
                               " cannot save on its center edge";
                    c = pick_preferring(pick, opt.avoid);
                } else {
                    c = pick_preferring(wb, opt.avoid);
                }
                saved = false;
                st.needy[a] = 1;
                st.sponsor[a] = b;
                st.log("needy", a, c, "sponsor " + std::to_string(b));
            }
        }
        apply_walk_choice(st, frame, i, c);
        if (saved) st.log("save", a, c, "guard " + std::to_string(b));
    }
    return std::nullopt;
}

bool complete_by_backtracking(ChooserState& st,
                              const std::vector<std::pair<EdgeId, int>>& quotas,
                              long long node_budget) {
    struct Slot {
        EdgeId e;
        int need;
    };
    std::vector<Slot> slots;
    for (auto [e, q] : quotas) {
        int need = q - st.phi.chosen[e].size();
        if (need > 0) slots.push_back({e, need});
    }
    long long nodes = 0;
    const Graph& g = *st.graph;

    std::function<bool()> go = [&]() -> bool {
        int best = -1;
        for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
            if (slots[i].need == 0) continue;
            if (st.work.at(slots[i].e).size() < slots[i].need) return false;
            if (best < 0 ||
                st.work.at(slots[i].e).size() < st.work.at(slots[best].e).size())
                best = i;
        }
        if (best < 0) return true;
        if (++nodes > node_budget) return false;
        EdgeId e = slots[best].e;
        ColorSet options = st.work.at(e);
        for (int c : options.values) {
            slots[best].need--;
            st.phi.chosen[e].insert(c);
            std::vector<EdgeId> hit;
            if (st.work.at(e).erase(c)) hit.push_back(e);
            for (EdgeId f : g.incident_edges(e))
                if (st.work.at(f).erase(c)) hit.push_back(f);
            if (go()) return true;
            for (EdgeId f : hit) st.work.at(f).insert(c);
            st.phi.chosen[e].erase(c);
            slots[best].need++;
            if (nodes > node_budget) return false;
        }
        return false;
    };
    return go();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Key lemma

std::vector<int> key_lemma_choose(const Graph& g, const CycleFrame& frame,
                                  const ListAssignment& lists) {
    const int k = static_cast<int>(frame.targets.size());
    if (k < 1 || frame.guards.size() != frame.targets.size())
        throw std::invalid_argument("malformed frame");
    for (int i = 0; i < k && k > 1; ++i) {
        EdgeId b = frame.guards[i];
        bool touches = g.shared_vertex(b, frame.targets[i]).has_value() &&
                       g.shared_vertex(b, frame.targets[(i + 1) % k]).has_value();
        if (!touches) throw std::invalid_argument("guard not incident to its targets");
    }

    int size = lists.at(frame.targets[0]).size();
    if (size == 0) throw std::invalid_argument("empty list");
    bool identical = true;
    const ColorSet& first = lists.at(frame.targets[0]);
    auto check = [&](EdgeId e) {
        if (lists.at(e).size() != size)
            throw std::invalid_argument("unequal list sizes");
        if (!(lists.at(e) == first)) identical = false;
    };
    for (EdgeId e : frame.targets) check(e);
    for (EdgeId e : frame.guards) check(e);

    std::vector<int> result(k, -1);
    if (identical || k == 1) {
        for (int i = 0; i < k; ++i) result[i] = first.smallest();
        return result;
    }

    // reindex so the differing consecutive pair of the interleaved sequence
    // becomes (last guard, first target); a target/guard mismatch reverses
    // the orientation, a guard/target mismatch rotates it
    std::vector<int> t_ord(k), g_ord(k);
    bool found = false;
    for (int i = 0; i < k && !found; ++i) {
        if (!(lists.at(frame.targets[i]) == lists.at(frame.guards[i]))) {
            for (int x = 0; x < k; ++x) {
                t_ord[x] = ((i - x) % k + k) % k;
                g_ord[x] = ((i - 1 - x) % k + k) % k;
            }
            found = true;
        } else if (!(lists.at(frame.guards[i]) == lists.at(frame.targets[(i + 1) % k]))) {
            for (int x = 0; x < k; ++x) {
                t_ord[x] = (x + i + 1) % k;
                g_ord[x] = (x + i + 1) % k;
            }
            found = true;
        }
    }
    if (!found) throw std::logic_error("lists differ but no adjacent pair does");

    auto tl = [&](int x) -> const ColorSet& { return lists.at(frame.targets[t_ord[x]]); };
    auto gl = [&](int x) -> const ColorSet& { return lists.at(frame.guards[g_ord[x]]); };

    std::vector<int> phi(k);
    {
        ColorSet head = tl(0).set_minus(gl(k - 1));
        if (head.empty()) throw std::logic_error("equal-size differing lists must split");
        phi[0] = head.smallest();
    }
    for (int x = 1; x < k; ++x) {
        int prev = phi[x - 1];
        const ColorSet& la = tl(x);
        const ColorSet& lb = gl(x - 1);
        if (!lb.contains(prev)) {
            phi[x] = la.smallest();
        } else if (la.contains(prev)) {
            phi[x] = prev;
        } else {
            ColorSet d = la.set_minus(lb);
            if (d.empty()) throw std::logic_error("case split exhausted");
            phi[x] = d.smallest();
        }
    }
    for (int x = 0; x < k; ++x) result[t_ord[x]] = phi[x];
    return result;
}

// ---------------------------------------------------------------------------
// Even cycles

SetColoring even_cycle_choose(const Graph& g, const CycleTrail& cycle,
                              const ListAssignment& L, int m) {
    const int len = cycle.length();
    if (len % 2 != 0) throw std::invalid_argument("odd cycle");
    if (m < 1) throw std::invalid_argument("multiplicity must be positive");
    for (EdgeId e : cycle.edges)
        if (L.at(e).size() < 2 * m) throw std::invalid_argument("list too small");

    ListAssignment work = L;
    for (EdgeId e : cycle.edges) work.at(e).trim_to(2 * m);

    const int k = len / 2;
    CycleFrame frame;
    for (int i = 0; i < k; ++i) {
        frame.targets.push_back(cycle.edges[2 * i]);
        frame.guards.push_back(cycle.edges[2 * i + 1]);
    }

    SetColoring out = SetColoring::empty_for(g, m);
    for (int round = 0; round < m; ++round) {
        int want = 2 * m - round;
        for (EdgeId e : frame.targets) work.at(e).trim_to(want);
        for (EdgeId e : frame.guards) work.at(e).trim_to(want);
        std::vector<int> colors = key_lemma_choose(g, frame, work);
        for (int i = 0; i < k; ++i) {
            int c = colors[i];
            out.chosen[frame.targets[i]].insert(c);
            work.at(frame.targets[i]).erase(c);
            work.at(frame.guards[i]).erase(c);
            work.at(frame.guards[(i + k - 1) % k]).erase(c);
        }
    }
    for (EdgeId b : frame.guards) {
        if (work.at(b).size() < m) throw std::logic_error("guard retained too few colors");
        for (int i = 0; i < m; ++i) out.chosen[b].insert(work.at(b).values[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coloring-classes pipeline

namespace {

void require_cubic(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) throw std::invalid_argument("graph must be 3-regular");
}

ListAssignment trimmed_lists(const Graph& g, const ListAssignment& L, int size) {
    if (L.edge_count() != g.edge_count())
        throw std::invalid_argument("assignment does not match the graph");
    ListAssignment W = L;
    for (auto& l : W.lists) {
        if (l.size() < size) throw std::invalid_argument("list deficit");
        l.trim_to(size);
    }
    return W;
}

ChooseOutcome finish(const Graph& g, const ListAssignment& L, ChooserState& st) {
    ChooseOutcome out;
    out.trace = std::move(st.trace);
    out.used_fallback = st.used_fallback;
    auto violations = verify_set_coloring(g, L, st.phi, 2);
    if (!violations.empty()) {
        out.gap = "output failed verification: " + violations.front().detail;
        return out;
    }
    out.coloring = std::move(st.phi);
    return out;
}

ChooseOutcome gap_outcome(ChooserState& st, std::string what) {
    ChooseOutcome out;
    out.trace = std::move(st.trace);
    out.used_fallback = st.used_fallback;
    out.gap = std::move(what);
    return out;
}

}  // namespace

ChooseOutcome choose_3ec(const Graph& g, const ThreeEdgeColoring& tec,
                         const ListAssignment& L) {
    require_cubic(g);
    {
        std::vector<int> cls(g.edge_count(), -1);
        for (int c = 0; c < 3; ++c)
            for (EdgeId e : tec.classes[c]) {
                if (e < 0 || e >= g.edge_count() || cls[e] != -1)
                    throw std::invalid_argument("improper coloring classes");
                cls[e] = c;
            }
        for (int c : cls)
            if (c < 0) throw std::invalid_argument("coloring does not cover all edges");
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (EdgeId f : g.incident_edges(e))
                if (cls[e] == cls[f]) throw std::invalid_argument("improper coloring");
    }

    ChooserState st;
    st.graph = &g;
    st.kind.assign(g.edge_count(), ChooserState::Kind::other);
    st.work = trimmed_lists(g, L, 7);
    st.phi = SetColoring::empty_for(g, 2);
    st.needy.assign(g.edge_count(), 0);
    st.sponsor.assign(g.edge_count(), -1);

    std::vector<int> cls(g.edge_count());
    for (int c = 0; c < 3; ++c)
        for (EdgeId e : tec.classes[c]) cls[e] = c;

    // one key-lemma pass over the even cycles of classes[ta] ∪ classes[tb],
    // with the ta portion receiving the colors
    auto run_phase = [&](int ta, int tb) -> std::optional<std::string> {
        MatchingUnion mu = cycles_of_matching_union(g, tec.classes[ta], tec.classes[tb]);
        if (!mu.paths.empty()) return "color classes are not perfect matchings";
        for (const CycleTrail& trail : mu.cycles) {
            int p = 0;
            while (cls[trail.edges[p]] != ta) ++p;
            CycleFrame frame;
            for (int i = 0; i < trail.length(); i += 2) {
                frame.targets.push_back(trail.edges[(p + i) % trail.length()]);
                frame.guards.push_back(trail.edges[(p + i + 1) % trail.length()]);
            }
            std::vector<int> colors = key_lemma_choose(g, frame, st.work);
            for (size_t i = 0; i < frame.targets.size(); ++i)
                st.choose(frame.targets[i], colors[i]);
        }
        return std::nullopt;
    };

    if (auto gap = run_phase(0, 1)) return gap_outcome(st, *gap);

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int need = cls[e] == 2 ? 5 : 6;
        if (st.work.at(e).size() < need)
            return gap_outcome(st, "phase-1 list bound broken on edge " + std::to_string(e));
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (cls[e] != 1) st.work.at(e).trim_to(5);

    if (auto gap = run_phase(0, 2)) return gap_outcome(st, *gap);

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (cls[e] == 0 && st.phi.chosen[e].size() != 2)
            return gap_outcome(st, "first class missed its two colors");
        if (cls[e] != 0 && st.work.at(e).size() < 4)
            return gap_outcome(st, "phase-2 list bound broken on edge " + std::to_string(e));
    }

    MatchingUnion mu = cycles_of_matching_union(g, tec.classes[1], tec.classes[2]);
    if (!mu.paths.empty()) return gap_outcome(st, "color classes are not perfect matchings");
    for (const CycleTrail& trail : mu.cycles) {
        SetColoring part = even_cycle_choose(g, trail, st.work, 2);
        for (EdgeId e : trail.edges) st.phi.chosen[e] = part.chosen[e];
    }
    return finish(g, L, st);
}

// ---------------------------------------------------------------------------
// MED pipeline

ChooserState make_chooser_state(const Graph& g, const MedDecomposition& med,
                                const ListAssignment& L) {
    require_cubic(g);
    if (!verify_med(g, med).empty())
        throw std::invalid_argument("decomposition fails verification");
    ChooserState st;
    st.graph = &g;
    st.kind.assign(g.edge_count(), ChooserState::Kind::other);
    st.leaf_sibling.assign(g.edge_count(), -1);
    st.leaf_center.assign(g.edge_count(), -1);
    for (EdgeId e : med.matching) st.kind[e] = ChooserState::Kind::matching;
    for (const auto& c : med.cycles)
        for (EdgeId e : c.edges) st.kind[e] = ChooserState::Kind::cycle;
    for (const auto& s : med.stars) {
        st.kind[s.center] = ChooserState::Kind::center;
        for (int i = 0; i < 4; ++i) {
            st.kind[s.leaves[i]] = ChooserState::Kind::leaf;
            st.leaf_center[s.leaves[i]] = s.center;
            st.leaf_sibling[s.leaves[i]] = s.leaves[i ^ 1];
        }
    }
    st.work = trimmed_lists(g, L, 7);
    st.phi = SetColoring::empty_for(g, 2);
    st.needy.assign(g.edge_count(), 0);
    st.sponsor.assign(g.edge_count(), -1);
    return st;
}

std::optional<std::string> lemma_cycle_process(ChooserState& st,
                                               const CycleFrame& frame) {
    if (auto pre = detail::check_walk_preconditions(st, frame))
        throw std::invalid_argument(*pre);
    return detail::walk_cycle(st, frame, {});
}

namespace {

using Kind = ChooserState::Kind;

struct MedPlan {
    const MedDecomposition* med;
    std::vector<int> cycle_of;                // EdgeId -> index into med->cycles, -1 otherwise
    std::vector<std::vector<EdgeId>> guards;  // per cycle, guard at shared[i]
    std::vector<int> component_of;            // per edge of G1∪G2∪H
    std::vector<std::vector<int>> comp_cycles;
    std::vector<std::vector<EdgeId>> comp_edges;
};

VertexId leaf_vertex(const ChooserState& st, EdgeId f) {
    const Graph& g = *st.graph;
    auto [u, v] = g.endpoints(f);
    auto [cu, cv] = g.endpoints(st.leaf_center[f]);
    return (u == cu || u == cv) ? v : u;
}

MedPlan build_plan(const ChooserState& st, const MedDecomposition& med) {
    const Graph& g = *st.graph;
    MedPlan plan;
    plan.med = &med;
    plan.cycle_of.assign(g.edge_count(), -1);
    for (int ci = 0; ci < static_cast<int>(med.cycles.size()); ++ci)
        for (EdgeId e : med.cycles[ci].edges) plan.cycle_of[e] = ci;

    plan.guards.resize(med.cycles.size());
    for (size_t ci = 0; ci < med.cycles.size(); ++ci) {
        const CycleTrail& t = med.cycles[ci];
        for (int i = 0; i < t.length(); ++i) {
            VertexId v = t.shared[i];
            EdgeId third = -1;
            for (EdgeId f : g.edges_at(v))
                if (f != t.edges[i] && f != t.edges[(i + 1) % t.length()]) third = f;
            plan.guards[ci].push_back(third);
        }
    }

    // components of G1 ∪ G2 ∪ H via a vertex union-find
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (st.kind[e] == Kind::center || st.kind[e] == Kind::other) continue;
        auto [u, v] = g.endpoints(e);
        parent[find(u)] = find(v);
    }
    plan.component_of.assign(g.edge_count(), -1);
    std::map<int, int> comp_id;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (st.kind[e] == Kind::center || st.kind[e] == Kind::other) continue;
        int root = find(g.endpoints(e).first);
        auto [it, fresh] = comp_id.try_emplace(root, static_cast<int>(comp_id.size()));
        plan.component_of[e] = it->second;
        if (fresh) {
            plan.comp_cycles.emplace_back();
            plan.comp_edges.emplace_back();
        }
        plan.comp_edges[it->second].push_back(e);
    }
    for (int ci = 0; ci < static_cast<int>(med.cycles.size()); ++ci)
        plan.comp_cycles[plan.component_of[med.cycles[ci].edges[0]]].push_back(ci);
    return plan;
}

// frame for cycle ci oriented so that targets[0] = anchor and guards[0] = seed
CycleFrame orient_frame(const MedPlan& plan, int ci, EdgeId anchor, EdgeId seed) {
    const CycleTrail& t = plan.med->cycles[ci];
    const int len = t.length();
    int p = 0;
    while (t.edges[p] != anchor) ++p;
    CycleFrame frame;
    if (plan.guards[ci][p] == seed) {
        for (int x = 0; x < len; ++x) {
            frame.targets.push_back(t.edges[(p + x) % len]);
            frame.guards.push_back(plan.guards[ci][(p + x) % len]);
        }
    } else {
        int q = (p + len - 1) % len;
        if (plan.guards[ci][q] != seed)
            throw std::logic_error("seed is not a guard of its anchor");
        for (int x = 0; x < len; ++x) {
            frame.targets.push_back(t.edges[(p - x + len) % len]);
            frame.guards.push_back(plan.guards[ci][(q - x + len) % len]);
        }
    }
    return frame;
}

// the two cycle edges meeting a guard on cycle ci, smaller position first
std::vector<EdgeId> guard_anchors(const MedPlan& plan, int ci, EdgeId guard) {
    const CycleTrail& t = plan.med->cycles[ci];
    std::vector<EdgeId> out;
    for (int i = 0; i < t.length(); ++i)
        if (plan.guards[ci][i] == guard) {
            out.push_back(t.edges[i]);
            out.push_back(t.edges[(i + 1) % t.length()]);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::string> run_case1(ChooserState& st, const MedPlan& plan, int comp) {
    const Graph& g = *st.graph;
    // the equality claim is about the lists as they stood on entry; picks on
    // one group shrink sibling leaf lists of the next
    const ListAssignment snapshot = st.work;

    // groups: components of the matching+cycle part, joined by leaf edges only
    std::map<VertexId, int> vgroup;
    {
        std::vector<int> parent(g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (EdgeId e : plan.comp_edges[comp]) {
            if (st.kind[e] == Kind::leaf) continue;
            auto [u, v] = g.endpoints(e);
            parent[find(u)] = find(v);
        }
        std::map<int, int> root_id;
        for (EdgeId e : plan.comp_edges[comp]) {
            if (st.kind[e] == Kind::leaf) continue;
            auto [u, v] = g.endpoints(e);
            int root = find(u);
            root_id.try_emplace(root, static_cast<int>(root_id.size()));
            vgroup[u] = root_id[root];
            vgroup[v] = root_id[root];
        }
    }

    int groups = 0;
    for (auto& [v, id] : vgroup) groups = std::max(groups, id + 1);
    std::vector<std::vector<EdgeId>> r_edges(groups), r_leaves(groups);
    for (EdgeId e : plan.comp_edges[comp]) {
        if (st.kind[e] == Kind::leaf)
            r_leaves[vgroup.at(leaf_vertex(st, e))].push_back(e);
        else
            r_edges[vgroup.at(g.endpoints(e).first)].push_back(e);
    }

    std::vector<int> order(groups);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return *std::min_element(r_edges[a].begin(), r_edges[a].end()) <
               *std::min_element(r_edges[b].begin(), r_edges[b].end());
    });

    for (int gi : order) {
        const ColorSet& common = snapshot.at(r_edges[gi].front());
        for (EdgeId e : r_edges[gi])
            if (!(snapshot.at(e) == common))
                return "identical-list component has mixed lists";
        for (EdgeId f : r_leaves[gi])
            if (!(snapshot.at(f) == common))
                return "identical-list component has mixed lists";
        if (common.size() < 2) return "common list too small";
        int c = common.values[0], c2 = common.values[1];
        for (EdgeId e : r_edges[gi]) {
            if (st.kind[e] != Kind::matching) continue;
            st.choose(e, c);
            st.choose(e, c2);
            st.log("case1", e, c, "matching pair");
        }
        std::vector<EdgeId> leaves = r_leaves[gi];
        std::sort(leaves.begin(), leaves.end());
        for (EdgeId f : leaves) {
            if (!st.phi.chosen[f].empty()) continue;
            int pick = c;
            EdgeId sib = st.leaf_sibling[f];
            if (!st.phi.chosen[sib].empty() && st.phi.chosen[sib].contains(c)) pick = c2;
            if (!st.phi.chosen[sib].empty() && st.phi.chosen[sib].contains(pick))
                return "leaf pair exhausted both shared colors";
            st.choose(f, pick);
            st.log("case1", f, pick, "leaf edge");
        }
    }
    return std::nullopt;
}

std::optional<std::string> run_case2(ChooserState& st, const MedPlan& plan, int comp,
                                     EdgeId seed_anchor, EdgeId seed_guard,
                                     long long fallback_budget,
                                     std::vector<char>& cycle_done,
                                     std::vector<char>& cycle_brute) {
    const int first_cycle = plan.cycle_of[seed_anchor];
    {
        CycleFrame frame = orient_frame(plan, first_cycle, seed_anchor, seed_guard);
        if (auto pre = detail::check_walk_preconditions(st, frame))
            return "seed rejected: " + *pre;
        st.log("seed", seed_anchor, -1, "guard " + std::to_string(seed_guard));
        if (auto gap = detail::walk_cycle(st, frame, {})) return gap;
        cycle_done[first_cycle] = 1;
    }

    struct SeedTry {
        bool seeded = false;
        std::optional<std::string> gap;
    };
    // preferring an orientation whose start condition is a strict non-subset;
    // leaf guards with a strictly smaller list qualify in a second pass
    auto try_seed = [&](int ci, EdgeId guard, bool allow_small_leaf) -> SeedTry {
        for (int pass = 0; pass < 2; ++pass) {
            for (EdgeId anchor : guard_anchors(plan, ci, guard)) {
                const ColorSet& wb = st.work.at(guard);
                const ColorSet& wa = st.work.at(anchor);
                bool start = pass == 0
                                 ? !wb.subset_of(wa)
                                 : allow_small_leaf && st.kind[guard] == Kind::leaf &&
                                       wb.subset_of(wa) && wb.size() < wa.size();
                if (!start) continue;
                CycleFrame frame = orient_frame(plan, ci, anchor, guard);
                if (detail::check_walk_preconditions(st, frame)) continue;
                SeedTry out;
                out.seeded = true;
                out.gap = detail::walk_cycle(st, frame, {});
                if (!out.gap) cycle_done[ci] = 1;
                return out;
            }
        }
        return {};
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (int ci : plan.comp_cycles[comp]) {
            if (cycle_done[ci]) continue;
            std::vector<EdgeId> gs = plan.guards[ci];
            std::sort(gs.begin(), gs.end());
            gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
            // matching-edge bridges colored once, then once-colored leaf pairs,
            // then any guard satisfying the start condition
            SeedTry attempt;
            for (EdgeId b : gs) {
                if (st.kind[b] != Kind::matching || st.phi.chosen[b].size() != 1) continue;
                attempt = try_seed(ci, b, false);
                if (attempt.seeded) break;
            }
            if (!attempt.seeded)
                for (EdgeId b : gs) {
                    if (st.kind[b] != Kind::leaf || !st.phi.chosen[b].empty() ||
                        st.phi.chosen[st.leaf_sibling[b]].empty())
                        continue;
                    attempt = try_seed(ci, b, true);
                    if (attempt.seeded) break;
                }
            if (!attempt.seeded)
                for (EdgeId b : gs) {
                    attempt = try_seed(ci, b, true);
                    if (attempt.seeded) {
                        st.log("extended_seed", b, -1, "cycle " + std::to_string(ci));
                        break;
                    }
                }
            if (attempt.seeded) {
                if (attempt.gap) return attempt.gap;
                progress = true;
                break;
            }
        }
    }

    // leftover cycles: the terminal rule gives every surrounding matching
    // edge one shared second color. Each leftover cycle edge has lost exactly
    // its two guards' first colors, so one more shared color keeps it at four.
    std::vector<int> leftovers;
    for (int ci : plan.comp_cycles[comp])
        if (!cycle_done[ci]) leftovers.push_back(ci);

    for (int ci : leftovers) {
        std::vector<EdgeId> gs = plan.guards[ci];
        std::sort(gs.begin(), gs.end());
        gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
        bool terminal = true;
        ColorSet shared;
        bool first = true;
        for (EdgeId b : gs) {
            if (st.kind[b] != Kind::matching || st.phi.chosen[b].size() != 1) {
                terminal = false;
                break;
            }
            shared = first ? st.work.at(b) : shared.set_intersect(st.work.at(b));
            first = false;
        }
        if (terminal && !shared.empty()) {
            int x = shared.smallest();
            for (EdgeId b : gs) st.choose(b, x);
            st.log("terminal", plan.med->cycles[ci].edges[0], x,
                   "second color on surrounding matching edges");
            cycle_done[ci] = 1;
        }
    }

    std::vector<std::pair<EdgeId, int>> quotas;
    for (int ci : plan.comp_cycles[comp]) {
        if (cycle_done[ci]) continue;
        for (EdgeId e : plan.med->cycles[ci].edges) quotas.emplace_back(e, 2);
        std::vector<EdgeId> gs = plan.guards[ci];
        std::sort(gs.begin(), gs.end());
        gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
        for (EdgeId b : gs)
            quotas.emplace_back(b, st.kind[b] == Kind::matching ? 2 : 1);
        cycle_done[ci] = 1;
        cycle_brute[ci] = 1;
    }
    if (!quotas.empty()) {
        st.used_fallback = true;
        st.log("fallback", -1, -1,
               std::to_string(quotas.size()) + " quota slots brute-forced");
        if (!detail::complete_by_backtracking(st, quotas, fallback_budget))
            return "stranded cycles resisted brute-force completion";
        for (auto [e, q] : quotas)
            if (st.kind[e] == Kind::cycle) st.needy[e] = 0;
    }
    return std::nullopt;
}

std::optional<std::string> run_completion(ChooserState& st, const MedPlan& plan) {
    const Graph& g = *st.graph;

    std::vector<EdgeId> needy_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (st.needy[e] && st.phi.chosen[e].size() < 2) needy_edges.push_back(e);
    for (size_t i = 0; i < needy_edges.size(); ++i)
        for (size_t j = i + 1; j < needy_edges.size(); ++j)
            if (g.shared_vertex(needy_edges[i], needy_edges[j]))
                return "needy edges do not form a matching";
    std::map<EdgeId, EdgeId> needy_of;  // sponsor -> its needy edge
    for (EdgeId e : needy_edges) {
        if (needy_of.count(st.sponsor[e])) return "sponsor serves two needy edges";
        needy_of[st.sponsor[e]] = e;
    }
    {
        std::vector<EdgeId> sp;
        for (auto& [s, e] : needy_of) sp.push_back(s);
        for (size_t i = 0; i < sp.size(); ++i)
            for (size_t j = i + 1; j < sp.size(); ++j)
                if (g.shared_vertex(sp[i], sp[j]))
                    return "sponsors do not form a matching";
    }
    for (const auto& star : plan.med->stars) {
        int sponsors = 0;
        for (EdgeId f : star.leaves)
            if (needy_of.count(f)) sponsors++;
        if (sponsors == 2 && st.work.at(star.center).size() < 4)
            return "doubly sponsored center edge fell below four colors";
    }

    for (const auto& star : plan.med->stars) {
        std::vector<EdgeId> leaves(star.leaves.begin(), star.leaves.end());
        std::sort(leaves.begin(), leaves.end());
        for (EdgeId f : leaves) {
            auto it = needy_of.find(f);
            if (it == needy_of.end()) continue;
            EdgeId needy = it->second;
            st.work.at(needy).trim_to(4);
            ColorSet pick = st.work.at(f).set_minus(st.work.at(needy));
            if (pick.empty())
                return "sponsor " + std::to_string(f) + " cannot save on its needy edge";
            int c = pick.smallest();
            st.choose(f, c);
            st.log("completion", f, c,
                   "second sponsor color saves on " + std::to_string(needy));
        }
        while (st.phi.chosen[star.center].size() < 2) {
            if (st.work.at(star.center).empty())
                return "center edge " + std::to_string(star.center) + " ran dry";
            st.choose(star.center, st.work.at(star.center).smallest());
        }
        for (EdgeId f : leaves)
            while (st.phi.chosen[f].size() < 2) {
                if (st.work.at(f).empty())
                    return "leaf edge " + std::to_string(f) + " ran dry";
                st.choose(f, st.work.at(f).smallest());
            }
    }
    return std::nullopt;
}

}  // namespace

ChooseOutcome choose_med(const Graph& g, const MedDecomposition& med,
                         const ListAssignment& L) {
    ChooserState st = make_chooser_state(g, med, L);
    MedPlan plan = build_plan(st, med);

    std::vector<char> cycle_done(med.cycles.size(), 0), cycle_brute(med.cycles.size(), 0);

    std::vector<int> comp_order(plan.comp_cycles.size());
    std::iota(comp_order.begin(), comp_order.end(), 0);
    std::sort(comp_order.begin(), comp_order.end(), [&](int a, int b) {
        return *std::min_element(plan.comp_edges[a].begin(), plan.comp_edges[a].end()) <
               *std::min_element(plan.comp_edges[b].begin(), plan.comp_edges[b].end());
    });

    for (int comp : comp_order) {
        // seed scan: first cycle edge with an incident matching/leaf edge
        // carrying a different list
        EdgeId seed_anchor = -1, seed_guard = -1;
        std::vector<EdgeId> comp_cycle_edges;
        for (int ci : plan.comp_cycles[comp])
            for (EdgeId e : plan.med->cycles[ci].edges) comp_cycle_edges.push_back(e);
        std::sort(comp_cycle_edges.begin(), comp_cycle_edges.end());
        for (EdgeId a : comp_cycle_edges) {
            for (EdgeId f : g.incident_edges(a)) {
                if (st.kind[f] != ChooserState::Kind::matching &&
                    st.kind[f] != ChooserState::Kind::leaf)
                    continue;
                if (!(st.work.at(f) == st.work.at(a))) {
                    seed_anchor = a;
                    seed_guard = f;
                    break;
                }
            }
            if (seed_anchor >= 0) break;
        }

        std::optional<std::string> gap;
        if (seed_anchor < 0) {
            gap = run_case1(st, plan, comp);
            for (int ci : plan.comp_cycles[comp]) cycle_done[ci] = 1;
        } else {
            gap = run_case2(st, plan, comp, seed_anchor, seed_guard, 500000,
                            cycle_done, cycle_brute);
        }
        if (gap) return gap_outcome(st, *gap);
    }

    if (auto gap = run_completion(st, plan)) return gap_outcome(st, *gap);

    for (size_t ci = 0; ci < med.cycles.size(); ++ci) {
        if (cycle_brute[ci]) continue;
        for (EdgeId e : med.cycles[ci].edges)
            if (st.work.at(e).size() < 4)
                return gap_outcome(st, "cycle edge " + std::to_string(e) +
                                           " kept fewer than four colors");
        SetColoring part = even_cycle_choose(g, med.cycles[ci], st.work, 2);
        for (EdgeId e : med.cycles[ci].edges) st.phi.chosen[e] = part.chosen[e];
    }
    return finish(g, L, st);
}

// ---------------------------------------------------------------------------
// Dispatcher

Choose72Result choose_72(const Graph& g, const ListAssignment& L,
                         long long med_budget) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 3) throw std::invalid_argument("max degree exceeds 3");

    Choose72Result res;
    bool cubic = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) cubic = false;

    if (auto tec = find_proper_3ec(g)) {
        res.route = Choose72Result::Route::three_ec;
        if (cubic) {
            res.outcome = choose_3ec(g, *tec, L);
            return res;
        }
        CubicCompletion comp = cubic_completion(g, tec);
        ListAssignment lifted;
        lifted.lists.assign(comp.graph.edge_count(), ColorSet::range(0, 7));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            lifted.lists[comp.edge_map[e]] = L.at(e);
        ChooseOutcome sup = choose_3ec(comp.graph, *comp.extended_coloring, lifted);
        res.outcome.trace = std::move(sup.trace);
        res.note = "colored via a 3-regular completion (" +
                   std::to_string(comp.iterations) + " doublings)";
        if (!sup.ok()) {
            res.outcome.gap = sup.gap;
            return res;
        }
        SetColoring phi = SetColoring::empty_for(g, 2);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            phi.chosen[e] = sup.coloring->chosen[comp.edge_map[e]];
        auto violations = verify_set_coloring(g, L, phi, 2);
        if (!violations.empty()) {
            res.outcome.gap = "restricted coloring failed verification";
            return res;
        }
        res.outcome.coloring = std::move(phi);
        return res;
    }

    if (!cubic) {
        res.route = Choose72Result::Route::unsupported;
        res.note = "not 3-edge-colorable and not 3-regular";
        return res;
    }

    std::optional<MedDecomposition> med = find_med_by_long_cycle(g);
    if (!med) {
        MedSearchResult sr = find_med_exhaustive(g, med_budget);
        if (sr.verdict == MedSearchResult::Verdict::found)
            med = std::move(sr.decomposition);
        else if (sr.verdict == MedSearchResult::Verdict::budget_exceeded)
            res.note = "exhaustive decomposition search hit its budget";
    }
    if (med) {
        res.route = Choose72Result::Route::med;
        res.outcome = choose_med(g, *med, L);
        return res;
    }

    if (g == generate_gstar()) {
        res.route = Choose72Result::Route::gstar;
        res.outcome = choose_gstar(g, L);
        return res;
    }

    res.route = Choose72Result::Route::unsupported;
    if (res.note.empty())
        res.note = "no 3-edge-coloring and no decomposition found";
    return res;
}

}  // namespace choose72
