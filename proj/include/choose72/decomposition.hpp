#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "choose72/graph.hpp"

namespace choose72 {

/// Proper 3-edge-coloring as three disjoint matchings covering E(G).
struct ThreeEdgeColoring {
    std::array<std::vector<EdgeId>, 3> classes;

    int class_of(EdgeId e) const;  // -1 if absent
};

/// Deterministic backtracking in canonical edge order, colors ascending.
std::optional<ThreeEdgeColoring> find_proper_3ec(const Graph& g);

struct CubicCompletion {
    Graph graph;
    std::vector<EdgeId> edge_map;  // original EdgeId -> EdgeId in `graph`
    int iterations = 0;
    std::optional<ThreeEdgeColoring> extended_coloring;
};

/// Repeatedly doubles the graph, joining the two copies of each vertex of
/// degree < 3, until 3-regular. A proper 3-edge-coloring of the input, when
/// supplied, is extended along the way.
CubicCompletion cubic_completion(const Graph& g,
                                 const std::optional<ThreeEdgeColoring>& coloring = {});

struct MatchingUnion {
    std::vector<CycleTrail> cycles;
    std::vector<std::vector<EdgeId>> paths;
};

/// Components of M1 ∪ M2: the cycles (alternating, hence even) and any paths
/// left over when the matchings are not perfect.
MatchingUnion cycles_of_matching_union(const Graph& g, const std::vector<EdgeId>& m1,
                                       const std::vector<EdgeId>& m2);

/// Five edges forming a 6-vertex tree with two adjacent degree-3 vertices.
/// leaves[0], leaves[1] sit at endpoints(center).first; leaves[2], leaves[3]
/// at endpoints(center).second.
struct DoubleStar {
    EdgeId center;
    std::array<EdgeId, 4> leaves;
};

struct MedDecomposition {
    std::vector<EdgeId> matching;        // G1
    std::vector<CycleTrail> cycles;      // G2, even cycles
    std::vector<DoubleStar> stars;       // G3, independent double-stars

    /// Leaf edges of all stars (the graph H: stars minus center edges).
    std::vector<EdgeId> leaf_path_edges() const;
};

struct MedViolation {
    std::string rule;
    std::string detail;
};

/// Empty result means d is a valid MED decomposition of g. The cubic-only
/// consequences (no vertex in both the matching and a star; every vertex off
/// the cycles lies on a center edge) are checked only when g is 3-regular.
std::vector<MedViolation> verify_med(const Graph& g, const MedDecomposition& d);

/// Looks for a decomposition whose G2 is a single cycle through all vertices
/// but the two ends of one edge; that edge becomes the star center. Tries
/// every edge in canonical order, every Hamiltonian cycle of the reduced
/// graph in backtracking order, and returns the first that verifies.
std::optional<MedDecomposition> find_med_by_long_cycle(const Graph& g);

/// Same search restricted to one removed adjacent pair {u, w}.
std::optional<MedDecomposition> find_med_omitting(const Graph& g, VertexId u,
                                                  VertexId w);

enum class MedSearchMode { strict_cubic, relaxed_subcubic };

struct MedSearchResult {
    enum class Verdict { found, none, budget_exceeded };
    Verdict verdict;
    std::optional<MedDecomposition> decomposition;
    long long nodes = 0;
    MedSearchMode mode = MedSearchMode::strict_cubic;
};

/// Complete backtracking over per-edge labels {matching, cycle, star-center,
/// star-leaf} with constraint propagation. A `none` verdict with an unlimited
/// budget (0) is a proof of nonexistence.
MedSearchResult find_med_exhaustive(const Graph& g, long long node_budget = 0,
                                    MedSearchMode mode = MedSearchMode::strict_cubic);

/// Enumerates Hamiltonian cycles of g as vertex sequences, smallest vertex
/// first, canonical direction; stops when visit returns false.
void enumerate_hamiltonian_cycles(const Graph& g,
                                  const std::vector<VertexId>& vertices,
                                  const std::function<bool(const std::vector<VertexId>&)>& visit);

}  // namespace choose72
