#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "choose72/graph.hpp"

namespace choose72 {

/// Strictly ascending set of nonnegative integer colors.
struct ColorSet {
    std::vector<int> values;

    ColorSet() = default;
    explicit ColorSet(std::vector<int> vals);
    static ColorSet of(std::initializer_list<int> vals);
    static ColorSet range(int lo, int hi);  // {lo, ..., hi-1}

    int size() const { return static_cast<int>(values.size()); }
    bool empty() const { return values.empty(); }
    bool contains(int c) const;
    int smallest() const;

    void insert(int c);
    bool erase(int c);  // true if c was present
    void erase_largest();
    /// Keep the k smallest colors (the discard-largest trimming rule).
    void trim_to(int k);

    ColorSet set_minus(const ColorSet& other) const;
    ColorSet set_intersect(const ColorSet& other) const;
    ColorSet set_union(const ColorSet& other) const;
    bool subset_of(const ColorSet& other) const;

    bool operator==(const ColorSet&) const = default;
};

/// Per-edge color lists (the available colors for each edge).
struct ListAssignment {
    std::vector<ColorSet> lists;

    const ColorSet& at(EdgeId e) const { return lists[e]; }
    ColorSet& at(EdgeId e) { return lists[e]; }
    int edge_count() const { return static_cast<int>(lists.size()); }
    /// Common list size if uniform, nullopt otherwise.
    std::optional<int> uniform_size() const;
};

/// Per-edge chosen color sets; empty set = uncolored. target_size is the
/// multiplicity s the coloring aims for.
struct SetColoring {
    std::vector<ColorSet> chosen;
    int target_size = 2;

    static SetColoring empty_for(const Graph& g, int s);
    bool complete() const;
};

/// Colors of L(e) still unclaimed by edges incident to e. Colors already
/// chosen on e itself are not subtracted here; callers picking further
/// colors for e exclude those separately.
ColorSet remaining_list(const Graph& g, const ListAssignment& L,
                        const SetColoring& phi, EdgeId e);

/// Number of colors chosen on edges incident to e, minus the number of
/// colors those choices knocked out of L(e). A color was "saved" on e
/// exactly when this is >= 1.
int save_margin(const Graph& g, const ListAssignment& L, const SetColoring& phi,
                EdgeId e);

struct ColoringViolation {
    enum class Rule { multiplicity, not_in_list, overlap };
    Rule rule;
    EdgeId edge;
    EdgeId other = -1;  // the second edge for overlap violations
    std::string detail;
};

/// Empty result means phi is a valid s-set coloring of g from L.
std::vector<ColoringViolation> verify_set_coloring(const Graph& g,
                                                   const ListAssignment& L,
                                                   const SetColoring& phi, int s);

/// Random r-subset of {0..palette-1} per edge; deterministic for a given seed.
ListAssignment make_uniform_assignment(const Graph& g, int r, int palette,
                                       uint64_t seed);

}  // namespace choose72
