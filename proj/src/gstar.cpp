#include <algorithm>
#include <stdexcept>

#include "choose72/chooser.hpp"
#include "chooser_internal.hpp"

namespace choose72 {

namespace {

using detail::WalkOptions;

struct QuadFrame {
    CycleTrail trail;
    std::vector<EdgeId> guards;  // guard at trail.shared[i]
};

QuadFrame quad_frame(const Graph& g, const GstarPiece& p) {
    QuadFrame qf;
    qf.trail = make_cycle_trail(
        g, {p.quad[0], p.quad[1], p.quad[2], p.quad[3]});
    for (int i = 0; i < 4; ++i) {
        VertexId v = qf.trail.shared[i];
        EdgeId third = -1;
        for (EdgeId f : g.edges_at(v))
            if (f != qf.trail.edges[i] && f != qf.trail.edges[(i + 1) % 4]) third = f;
        qf.guards.push_back(third);
    }
    return qf;
}

CycleFrame orient_quad(const QuadFrame& qf, int anchor_pos, int guard_pos) {
    CycleFrame frame;
    if (guard_pos == anchor_pos) {
        for (int x = 0; x < 4; ++x) {
            frame.targets.push_back(qf.trail.edges[(anchor_pos + x) % 4]);
            frame.guards.push_back(qf.guards[(anchor_pos + x) % 4]);
        }
    } else {
        for (int x = 0; x < 4; ++x) {
            frame.targets.push_back(qf.trail.edges[(anchor_pos - x + 4) % 4]);
            frame.guards.push_back(qf.guards[(guard_pos - x + 4) % 4]);
        }
    }
    return frame;
}

// every quad edge must keep a save: it sees three claim colors (its fork's
// one plus both on the opposite edge), so at most two may land in its list
bool claim_saves_everywhere(const ChooserState& st, const GstarPiece& p,
                            int fork0_color, int fork1_color, int opp_a, int opp_b) {
    for (int i = 0; i < 4; ++i) {
        int fork_color = i < 2 ? fork0_color : fork1_color;
        const ColorSet& list = st.work.at(p.quad[i]);
        ColorSet hit;
        if (list.contains(fork_color)) hit.insert(fork_color);
        if (list.contains(opp_a)) hit.insert(opp_a);
        if (list.contains(opp_b)) hit.insert(opp_b);
        if (hit.size() >= 3) return false;
    }
    return true;
}

// partial coloring of one piece: one color on each fork, two on the opposite
// edge, a save on every quad edge
std::optional<std::string> piece_claim(ChooserState& st, const GstarPiece& p) {
    const Graph& g = *st.graph;
    std::vector<EdgeId> inner = {p.fork[0], p.fork[1], p.opposite,
                                 p.quad[0],  p.quad[1], p.quad[2], p.quad[3]};
    bool identical = true;
    for (EdgeId e : inner)
        if (!(st.work.at(e) == st.work.at(inner[0]))) identical = false;

    if (identical) {
        const ColorSet common = st.work.at(inner[0]);
        if (common.size() < 2) return "common list too small";
        int c = common.values[0], c2 = common.values[1];
        st.choose(p.fork[0], c);
        st.choose(p.fork[1], c2);
        st.choose(p.opposite, c);
        st.choose(p.opposite, c2);
        st.log("piece_claim", p.opposite, c, "identical lists");
        return std::nullopt;
    }

    // the two forks share the subdivision vertex, so the walk can wedge for
    // an unlucky seed; try every seed orientation on a copy
    QuadFrame qf = quad_frame(g, p);
    for (int pos = 0; pos < 4; ++pos) {
        EdgeId target = qf.trail.edges[pos];
        for (int gp : {pos, (pos + 3) % 4}) {
            if (st.work.at(qf.guards[gp]) == st.work.at(target)) continue;
            CycleFrame frame = orient_quad(qf, pos, gp);
            if (detail::check_walk_preconditions(st, frame)) continue;
            ChooserState attempt = st;
            if (detail::walk_cycle(attempt, frame, {})) continue;
            st = std::move(attempt);
            st.log("piece_claim", target, -1, "walk seeded at guard " +
                                                  std::to_string(qf.guards[gp]));
            return std::nullopt;
        }
    }

    // last resort: the claim contract is small enough to search outright
    for (int a : st.work.at(p.fork[0]).values)
        for (int b : st.work.at(p.fork[1]).values) {
            if (a == b) continue;  // forks share the subdivision vertex
            const ColorSet& opp = st.work.at(p.opposite);
            for (int i = 0; i < opp.size(); ++i)
                for (int j = i + 1; j < opp.size(); ++j) {
                    if (!claim_saves_everywhere(st, p, a, b, opp.values[i],
                                                opp.values[j]))
                        continue;
                    int oa = opp.values[i], ob = opp.values[j];
                    st.choose(p.fork[0], a);
                    st.choose(p.fork[1], b);
                    st.choose(p.opposite, oa);
                    st.choose(p.opposite, ob);
                    st.log("piece_claim", p.opposite, oa, "exhaustive claim search");
                    return std::nullopt;
                }
        }
    return "no claim coloring saves on every quad edge";
}

// one escape route for the last piece: a forced color on the seed guard, the
// paired fork completed before the pendant, the lone fork after
bool try_escape_route(ChooserState& st, const GstarPiece& p, const ColorSet& cc,
                      EdgeId seed, const ColorSet& betas, EdgeId pair_fork,
                      EdgeId lone_fork, int qa, int qb) {
    const Graph& g = *st.graph;
    QuadFrame qf = quad_frame(g, p);
    for (int beta : betas.values) {
        for (int pos = 0; pos < 4; ++pos) {
            if (qf.trail.edges[pos] != p.quad[qa] && qf.trail.edges[pos] != p.quad[qb])
                continue;
            for (int gp : {pos, (pos + 3) % 4}) {
                if (qf.guards[gp] != seed) continue;
                if (st.work.at(qf.trail.edges[pos]).contains(beta)) continue;
                ChooserState attempt = st;
                CycleFrame frame = orient_quad(qf, pos, gp);
                WalkOptions opt;
                opt.forced_first = beta;
                opt.avoid = cc;
                if (detail::walk_cycle(attempt, frame, opt)) continue;
                if (attempt.work.at(pair_fork).empty()) continue;
                attempt.choose(pair_fork,
                               detail::pick_preferring(attempt.work.at(pair_fork), cc));
                ColorSet avail = cc.set_intersect(attempt.work.at(p.pendant));
                if (avail.empty()) continue;
                attempt.choose(p.pendant, avail.smallest());
                if (attempt.work.at(p.pendant).empty()) continue;
                attempt.choose(p.pendant, attempt.work.at(p.pendant).smallest());
                if (attempt.work.at(lone_fork).empty()) continue;
                attempt.choose(lone_fork, attempt.work.at(lone_fork).smallest());
                bool quads_ok = true;
                for (EdgeId e : p.quad)
                    if (attempt.work.at(e).size() < 4) quads_ok = false;
                if (!quads_ok) continue;
                st = std::move(attempt);
                st.log("route", seed, beta, "escape route committed");
                return true;
            }
        }
    }
    return false;
}

bool try_intersection_route(ChooserState& st, const GstarPiece& p,
                            const ColorSet& cc) {
    ChooserState attempt = st;
    ColorSet l0_f0 = attempt.work.at(p.fork[0]).set_minus(cc);
    ColorSet l0_f1 = attempt.work.at(p.fork[1]).set_minus(cc);
    ColorSet l0_d = attempt.work.at(p.opposite).set_minus(cc);
    ColorSet first = l0_f0.set_intersect(l0_d);
    if (first.empty()) return false;
    int alpha = first.smallest();
    ColorSet second = l0_f1.set_intersect(l0_d);
    second.erase(alpha);
    if (second.empty()) return false;
    int beta = second.smallest();
    attempt.choose(p.fork[0], alpha);
    attempt.choose(p.fork[1], beta);
    attempt.choose(p.opposite, alpha);
    attempt.choose(p.opposite, beta);
    if (attempt.work.at(p.fork[1]).empty()) return false;
    attempt.choose(p.fork[1],
                   detail::pick_preferring(attempt.work.at(p.fork[1]), cc));
    ColorSet avail = cc.set_intersect(attempt.work.at(p.pendant));
    if (avail.empty()) return false;
    attempt.choose(p.pendant, avail.smallest());
    if (attempt.work.at(p.pendant).empty()) return false;
    attempt.choose(p.pendant, attempt.work.at(p.pendant).smallest());
    if (attempt.work.at(p.fork[0]).empty()) return false;
    attempt.choose(p.fork[0], attempt.work.at(p.fork[0]).smallest());
    for (EdgeId e : p.quad)
        if (attempt.work.at(e).size() < 4) return false;
    st = std::move(attempt);
    st.log("route", p.opposite, alpha, "intersection route committed");
    return true;
}

}  // namespace

ChooseOutcome choose_gstar(const Graph& g, const ListAssignment& L) {
    if (!(g == generate_gstar()))
        throw std::invalid_argument("expects the canonical 16-vertex special graph");
    GstarLayout layout = gstar_layout();

    ChooserState st;
    st.graph = &g;
    st.kind.assign(g.edge_count(), ChooserState::Kind::other);
    for (const GstarPiece& p : layout.piece) {
        for (EdgeId e : p.quad) st.kind[e] = ChooserState::Kind::cycle;
        st.kind[p.fork[0]] = ChooserState::Kind::matching;
        st.kind[p.fork[1]] = ChooserState::Kind::matching;
        st.kind[p.opposite] = ChooserState::Kind::matching;
    }
    st.leaf_sibling.assign(g.edge_count(), -1);
    st.leaf_center.assign(g.edge_count(), -1);
    st.needy.assign(g.edge_count(), 0);
    st.sponsor.assign(g.edge_count(), -1);
    st.phi = SetColoring::empty_for(g, 2);
    {
        if (L.edge_count() != g.edge_count())
            throw std::invalid_argument("assignment does not match the graph");
        st.work = L;
        for (auto& l : st.work.lists) {
            if (l.size() < 7) throw std::invalid_argument("list deficit");
            l.trim_to(7);
        }
    }

    auto gap_out = [&](std::string what) {
        ChooseOutcome out;
        out.trace = std::move(st.trace);
        out.gap = std::move(what);
        return out;
    };

    const GstarPiece& p0 = layout.piece[0];
    const GstarPiece& p1 = layout.piece[1];
    const GstarPiece& p2 = layout.piece[2];

    if (auto gap = piece_claim(st, p0)) return gap_out(*gap);
    if (auto gap = piece_claim(st, p1)) return gap_out(*gap);

    // pause before the second color of the second piece's later fork: pick it
    // together with the first pendant's color so the middle pendant saves
    {
        const ColorSet A = st.work.at(p0.pendant);
        const ColorSet B = st.work.at(p1.fork[1]);
        const ColorSet& W2 = st.work.at(p1.pendant);
        int alpha, beta;
        ColorSet a_out = A.set_minus(W2);
        ColorSet b_out = B.set_minus(W2);
        if (!a_out.empty()) {
            alpha = a_out.smallest();
            beta = B.smallest();
        } else if (!b_out.empty()) {
            alpha = A.smallest();
            beta = b_out.smallest();
        } else {
            ColorSet both = A.set_intersect(B);
            if (both.empty()) return gap_out("hub coordination found no saving pair");
            alpha = beta = both.smallest();
        }
        st.choose(p0.pendant, alpha);
        st.choose(p1.fork[1], beta);
        st.log("coordination", p0.pendant, alpha,
               "paired with " + std::to_string(beta) + " on the second piece");
        if (st.work.at(p1.pendant).size() < 4)
            return gap_out("middle pendant fell below four colors");
        if (st.work.at(p0.pendant).size() < 3)
            return gap_out("first pendant fell below three colors");
        st.work.at(p1.pendant).trim_to(4);
        st.work.at(p0.pendant).trim_to(3);
    }

    // two colors for the last pendant that dodge the middle pendant's list
    ColorSet cc = st.work.at(p2.pendant).set_minus(st.work.at(p1.pendant));
    if (cc.size() < 2) return gap_out("fewer than two desirable colors remain");
    cc.trim_to(2);

    bool done =
        try_escape_route(st, p2, cc, p2.fork[0],
                         st.work.at(p2.fork[0]).set_minus(cc).set_minus(
                             st.work.at(p2.quad[0]).set_intersect(st.work.at(p2.quad[1]))),
                         p2.fork[1], p2.fork[0], 0, 1) ||
        try_escape_route(st, p2, cc, p2.fork[1],
                         st.work.at(p2.fork[1]).set_minus(cc).set_minus(
                             st.work.at(p2.quad[2]).set_intersect(st.work.at(p2.quad[3]))),
                         p2.fork[0], p2.fork[1], 2, 3) ||
        try_escape_route(st, p2, cc, p2.opposite,
                         st.work.at(p2.opposite).set_minus(cc).set_minus(
                             st.work.at(p2.quad[0]).set_intersect(st.work.at(p2.quad[1]))),
                         p2.fork[1], p2.fork[0], 0, 1) ||
        try_escape_route(st, p2, cc, p2.opposite,
                         st.work.at(p2.opposite).set_minus(cc).set_minus(
                             st.work.at(p2.quad[2]).set_intersect(st.work.at(p2.quad[3]))),
                         p2.fork[0], p2.fork[1], 2, 3) ||
        try_intersection_route(st, p2, cc);
    if (!done) return gap_out("no route colors the last piece with a desirable color");

    // one more color on the first pendant, then two on the middle one
    if (st.work.at(p0.pendant).empty()) return gap_out("first pendant ran dry");
    st.choose(p0.pendant, st.work.at(p0.pendant).smallest());
    if (st.work.at(p1.pendant).size() < 2) return gap_out("middle pendant ran dry");
    st.choose(p1.pendant, st.work.at(p1.pendant).smallest());
    st.choose(p1.pendant, st.work.at(p1.pendant).smallest());

    // remaining second colors outside the 4-cycles
    for (EdgeId e : {p0.fork[0], p0.fork[1], p1.fork[0]}) {
        if (st.work.at(e).empty()) return gap_out("fork ran dry before completion");
        st.choose(e, st.work.at(e).smallest());
    }

    for (const GstarPiece& p : layout.piece) {
        for (EdgeId e : p.quad)
            if (st.work.at(e).size() < 4)
                return gap_out("quad edge " + std::to_string(e) +
                               " kept fewer than four colors");
        CycleTrail trail = make_cycle_trail(
            g, {p.quad[0], p.quad[1], p.quad[2], p.quad[3]});
        SetColoring part = even_cycle_choose(g, trail, st.work, 2);
        for (EdgeId e : trail.edges) st.phi.chosen[e] = part.chosen[e];
    }

    ChooseOutcome out;
    out.trace = std::move(st.trace);
    auto violations = verify_set_coloring(g, L, st.phi, 2);
    if (!violations.empty()) {
        out.gap = "output failed verification: " + violations.front().detail;
        return out;
    }
    out.coloring = std::move(st.phi);
    return out;
}

}  // namespace choose72
