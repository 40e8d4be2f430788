#pragma once

#include <optional>
#include <string>
#include <vector>

#include "choose72/chooser.hpp"

namespace choose72::detail {

/// Remove c from the set; if c is absent, remove the largest color instead.
void forced_remove(ColorSet& set, int c);

/// Smallest color of `from` outside `avoid`, falling back to the smallest
/// overall when none qualifies.
int pick_preferring(const ColorSet& from, const ColorSet& avoid);

struct WalkOptions {
    std::optional<int> forced_first;  // color imposed on guards[0]
    ColorSet avoid;                   // soft preference: dodge these colors
};

/// Core cycle walk: one color per guard, saving on each target where
/// possible; otherwise the needy/sponsor rule for leaf guards. Returns a
/// contract-gap description on failure. Callers validate preconditions.
std::optional<std::string> walk_cycle(ChooserState& st, const CycleFrame& frame,
                                      const WalkOptions& opt);

/// Walk preconditions: the start condition on
/// (targets[0], guards[0]) and the per-position size hypothesis.
std::optional<std::string> check_walk_preconditions(const ChooserState& st,
                                                    const CycleFrame& frame);

/// Exhaustively completes the given edges to their color quotas from the
/// current working lists. Used as the logged last-resort fallback.
bool complete_by_backtracking(ChooserState& st,
                              const std::vector<std::pair<EdgeId, int>>& quotas,
                              long long node_budget);

}  // namespace choose72::detail
