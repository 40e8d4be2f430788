#pragma once

#include <optional>
#include <string>
#include <vector>

#include "choose72/color.hpp"
#include "choose72/decomposition.hpp"
#include "choose72/graph.hpp"

namespace choose72 {

/// Alternating frame: one color is chosen per `targets[i]` so that each
/// `guards[i]` (incident to targets[i] and targets[i+1], cyclically) sees at
/// most one chosen color from its own list. The same underlying edge may
/// appear as two different guards (a chord).
struct CycleFrame {
    std::vector<EdgeId> targets;
    std::vector<EdgeId> guards;
};

struct TraceEvent {
    std::string step;
    EdgeId edge = -1;
    int color = -1;
    std::string note;
};

/// Working state threaded through the constructive procedures: live
/// availability lists, the partial coloring, needy/sponsor bookkeeping and a
/// decision log.
struct ChooserState {
    const Graph* graph = nullptr;

    // per-edge role: matching-like frame edge, cycle edge, star center,
    // star leaf (the graph H), or outside the decomposition machinery
    enum class Kind : char { matching, cycle, center, leaf, other };
    std::vector<Kind> kind;

    ListAssignment work;  // colors still available per edge (own picks excluded)
    SetColoring phi;

    std::vector<EdgeId> leaf_sibling;  // for leaf edges: the other leaf at the same center end
    std::vector<EdgeId> leaf_center;   // for leaf edges: their star's center edge

    std::vector<char> needy;      // per edge, cycle edges only
    std::vector<EdgeId> sponsor;  // per needy edge: the leaf edge responsible for it

    std::vector<TraceEvent> trace;
    bool used_fallback = false;

    void log(std::string step, EdgeId e = -1, int color = -1, std::string note = "");
    /// Records one chosen color with plain removals from incident lists.
    void choose(EdgeId e, int color);
};

/// Builds a chooser state for a verified MED decomposition; trims all lists
/// to size 7 (throws if any list is smaller or the decomposition is invalid).
ChooserState make_chooser_state(const Graph& g, const MedDecomposition& med,
                                const ListAssignment& L);

/// One color per target edge so that every guard keeps all but at most one of
/// the chosen colors of its two neighbors out of its list. Lists on the frame
/// edges must share one size.
std::vector<int> key_lemma_choose(const Graph& g, const CycleFrame& frame,
                                  const ListAssignment& lists);

/// m disjoint colors per edge of an even cycle from lists of size >= 2m
/// (trimmed to exactly 2m first). Only the trail's edges are colored.
SetColoring even_cycle_choose(const Graph& g, const CycleTrail& cycle,
                              const ListAssignment& L, int m);

struct ChooseOutcome {
    std::optional<SetColoring> coloring;  // verified before being returned
    std::optional<std::string> gap;       // contract gap description on failure
    std::vector<TraceEvent> trace;
    bool used_fallback = false;

    bool ok() const { return coloring.has_value(); }
};

/// Walks one cycle of the decomposition choosing a color per guard, saving on
/// each cycle edge where possible and recording needy/sponsor pairs where
/// not. Preconditions (start condition and per-step size hypotheses) are
/// validated up front. Returns a contract-gap description on failure.
std::optional<std::string> lemma_cycle_process(ChooserState& st,
                                               const CycleFrame& frame);

/// Coloring-classes pipeline: two key-lemma phases over the classes of a
/// proper 3-edge-coloring, then even-cycle completion. Requires a 3-regular
/// graph, a proper coloring and 7-lists.
ChooseOutcome choose_3ec(const Graph& g, const ThreeEdgeColoring& tec,
                         const ListAssignment& L);

/// MED pipeline: per-component identical-list shortcut or cycle walks with
/// needy/sponsor bookkeeping, star completion, then even-cycle completion.
ChooseOutcome choose_med(const Graph& g, const MedDecomposition& med,
                         const ListAssignment& L);

/// Dedicated chooser for the canonical generate_gstar() graph.
ChooseOutcome choose_gstar(const Graph& g, const ListAssignment& L);

struct Choose72Result {
    enum class Route { three_ec, med, gstar, unsupported };
    Route route = Route::unsupported;
    ChooseOutcome outcome;
    std::string note;
};

/// Dispatcher: proper 3-edge-coloring route (completing subcubic graphs to
/// cubic first), then MED (long-cycle, then bounded exhaustive), then the
/// canonical special graph, else unsupported.
Choose72Result choose_72(const Graph& g, const ListAssignment& L,
                         long long med_budget = 2000000);

}  // namespace choose72
