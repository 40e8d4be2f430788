#include "choose72/color.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "choose72/rng.hpp"

namespace choose72 {

ColorSet::ColorSet(std::vector<int> vals) : values(std::move(vals)) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (!values.empty() && values.front() < 0)
        throw std::invalid_argument("negative color");
}

ColorSet ColorSet::of(std::initializer_list<int> vals) {
    return ColorSet(std::vector<int>(vals));
}

ColorSet ColorSet::range(int lo, int hi) {
    ColorSet s;
    for (int c = lo; c < hi; ++c) s.values.push_back(c);
    return s;
}

bool ColorSet::contains(int c) const {
    return std::binary_search(values.begin(), values.end(), c);
}

int ColorSet::smallest() const {
    if (values.empty()) throw std::logic_error("smallest() on empty color set");
    return values.front();
}

void ColorSet::insert(int c) {
    auto it = std::lower_bound(values.begin(), values.end(), c);
    if (it == values.end() || *it != c) values.insert(it, c);
}

bool ColorSet::erase(int c) {
    auto it = std::lower_bound(values.begin(), values.end(), c);
    if (it != values.end() && *it == c) {
        values.erase(it);
        return true;
    }
    return false;
}

void ColorSet::erase_largest() {
    if (!values.empty()) values.pop_back();
}

void ColorSet::trim_to(int k) {
    if (k < 0) throw std::invalid_argument("negative trim size");
    if (size() > k) values.resize(k);
}

ColorSet ColorSet::set_minus(const ColorSet& other) const {
    ColorSet out;
    std::set_difference(values.begin(), values.end(), other.values.begin(),
                        other.values.end(), std::back_inserter(out.values));
    return out;
}

ColorSet ColorSet::set_intersect(const ColorSet& other) const {
    ColorSet out;
    std::set_intersection(values.begin(), values.end(), other.values.begin(),
                          other.values.end(), std::back_inserter(out.values));
    return out;
}

ColorSet ColorSet::set_union(const ColorSet& other) const {
    ColorSet out;
    std::set_union(values.begin(), values.end(), other.values.begin(),
                   other.values.end(), std::back_inserter(out.values));
    return out;
}

bool ColorSet::subset_of(const ColorSet& other) const {
    return std::includes(other.values.begin(), other.values.end(), values.begin(),
                         values.end());
}

std::optional<int> ListAssignment::uniform_size() const {
    if (lists.empty()) return 0;
    int s = lists.front().size();
    for (const auto& l : lists)
        if (l.size() != s) return std::nullopt;
    return s;
}

SetColoring SetColoring::empty_for(const Graph& g, int s) {
    SetColoring phi;
    phi.chosen.assign(g.edge_count(), {});
    phi.target_size = s;
    return phi;
}

bool SetColoring::complete() const {
    for (const auto& c : chosen)
        if (c.size() != target_size) return false;
    return true;
}

ColorSet remaining_list(const Graph& g, const ListAssignment& L,
                        const SetColoring& phi, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("invalid edge id");
    ColorSet out = L.at(e);
    for (EdgeId f : g.incident_edges(e))
        for (int c : phi.chosen[f].values) out.erase(c);
    return out;
}

int save_margin(const Graph& g, const ListAssignment& L, const SetColoring& phi,
                EdgeId e) {
    int events = 0;
    ColorSet removed;
    for (EdgeId f : g.incident_edges(e)) {
        events += phi.chosen[f].size();
        for (int c : phi.chosen[f].values)
            if (L.at(e).contains(c)) removed.insert(c);
    }
    return events - removed.size();
}

std::vector<ColoringViolation> verify_set_coloring(const Graph& g,
                                                   const ListAssignment& L,
                                                   const SetColoring& phi, int s) {
    std::vector<ColoringViolation> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (phi.chosen[e].size() != s)
            out.push_back({ColoringViolation::Rule::multiplicity, e, -1,
                           "expected " + std::to_string(s) + " colors, got " +
                               std::to_string(phi.chosen[e].size())});
        if (!phi.chosen[e].subset_of(L.at(e)))
            out.push_back({ColoringViolation::Rule::not_in_list, e, -1,
                           "chosen color outside the edge's list"});
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f : g.incident_edges(e)) {
            if (f <= e) continue;
            ColorSet common = phi.chosen[e].set_intersect(phi.chosen[f]);
            if (!common.empty())
                out.push_back({ColoringViolation::Rule::overlap, e, f,
                               "incident edges share color " +
                                   std::to_string(common.smallest())});
        }
    return out;
}

ListAssignment make_uniform_assignment(const Graph& g, int r, int palette,
                                       uint64_t seed) {
    if (r > palette) throw std::invalid_argument("list size exceeds palette");
    if (r < 0 || palette < 0) throw std::invalid_argument("negative size");
    ListAssignment L;
    L.lists.resize(g.edge_count());
    SplitMix64 rng(seed);
    std::vector<int> pool(palette);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < r; ++i) {
            int j = i + static_cast<int>(rng.below(palette - i));
            std::swap(pool[i], pool[j]);
        }
        L.at(e) = ColorSet(std::vector<int>(pool.begin(), pool.begin() + r));
    }
    return L;
}

}  // namespace choose72
