#pragma once

#include <optional>
#include <vector>

#include "choose72/color.hpp"
#include "choose72/graph.hpp"

namespace choose72 {

struct OracleResult {
    enum class Verdict { yes, no, budget_exceeded };
    Verdict verdict;
    std::optional<SetColoring> witness;  // verifier-passing when yes
    long long nodes = 0;
};

/// Exact backtracking: does an s-set coloring exist inside the given lists?
/// Most-constrained edge first, s-subsets tried in lexicographic order,
/// deterministic node count. budget 0 = unlimited.
OracleResult brute_force_choose(const Graph& g, const ListAssignment& L, int s,
                                long long node_budget = 0);

/// Identical lists {0..r-1} on every edge, with first-edge color-permutation
/// symmetry broken.
OracleResult brute_force_rs_colorable(const Graph& g, int r, int s,
                                      long long node_budget = 0);

/// Same verdict computed by splitting the first edge's choices across OpenMP
/// threads, each running the serial kernel; node counts are summed.
OracleResult brute_force_rs_colorable_parallel(const Graph& g, int r, int s,
                                               long long node_budget = 0);

struct ChoosabilityResult {
    OracleResult::Verdict verdict;
    long long assignments_checked = 0;
    long long nodes = 0;
    std::optional<ListAssignment> counterexample;  // an assignment with no coloring
};

/// Checks (r,s)-edge-choosability over all r-uniform assignments drawn from
/// {0..palette-1}, enumerated up to global color relabeling. Tiny graphs only.
ChoosabilityResult exhaustive_choosability_check(const Graph& g, int r, int s,
                                                 int palette,
                                                 long long node_budget = 0);

}  // namespace choose72
