#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace choose72 {

using VertexId = int;
using EdgeId = int;

/// Immutable simple undirected graph with maximum degree 3.
/// Edges are kept sorted lexicographically by endpoint pair (u < v);
/// an EdgeId is the position of the pair in that order, so identical
/// edge sets always produce identical ids.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list,
          bool require_max_degree3 = true);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return edges_[e]; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    const std::vector<EdgeId>& edges_at(VertexId v) const { return vertex_edges_[v]; }
    int degree(VertexId v) const { return static_cast<int>(vertex_edges_[v].size()); }

    bool adjacent(VertexId u, VertexId v) const;
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
    VertexId other_end(EdgeId e, VertexId v) const;
    /// Common endpoint of two distinct incident edges, if any.
    std::optional<VertexId> shared_vertex(EdgeId e, EdgeId f) const;
    /// All edges sharing an endpoint with e, excluding e itself; sorted, at most 4.
    const std::vector<EdgeId>& incident_edges(EdgeId e) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<EdgeId>> vertex_edges_;
    std::vector<std::vector<EdgeId>> edge_neighbors_;
};

/// Closed trail of distinct edges forming a cycle; shared[i] is the vertex
/// common to edges[i] and edges[(i+1) % k].
struct CycleTrail {
    std::vector<EdgeId> edges;
    std::vector<VertexId> shared;

    int length() const { return static_cast<int>(edges.size()); }
};

/// Builds the trail from edges listed in cyclic order; validates that
/// consecutive edges share exactly one vertex, edges are distinct and the
/// walk closes up without revisiting vertices.
CycleTrail make_cycle_trail(const Graph& g, const std::vector<EdgeId>& cyclic_edges);

struct StructureReport {
    bool connected = false;
    bool two_connected = false;
    bool cubic = false;
    bool subcubic = false;
    std::optional<int> girth;  // nullopt for forests
    int bridge_count = 0;
};

StructureReport structure_checks(const Graph& g);

Graph parse_graph6(const std::string& line, bool enforce_max_degree3 = true);
std::string encode_graph6(const Graph& g);

// Named generators with fixed labelings so fixtures stay byte-stable.
Graph generate_petersen();
Graph generate_flower_snark(int k);
Graph generate_gstar();
Graph generate_two_k4_gadget();
Graph generate_even_cycle(int len);

/// Edge roles of one of the three identical pieces glued into the hub
/// vertex of generate_gstar(): `pendant` joins the piece's subdivision
/// vertex to the hub; `fork[0..1]` are the two edges at the subdivision
/// vertex; `opposite` is the one edge touching neither; `quad[0..3]` is the
/// remaining 4-cycle in cyclic order with quad[0], quad[1] meeting fork[0]
/// and quad[2], quad[3] meeting fork[1].
struct GstarPiece {
    EdgeId pendant;
    EdgeId fork[2];
    EdgeId opposite;
    EdgeId quad[4];
};

struct GstarLayout {
    VertexId hub;
    GstarPiece piece[3];
};

GstarLayout gstar_layout();

}  // namespace choose72
