#include "choose72/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace choose72 {

using nlohmann::json;

std::string assignment_to_json(const Graph& g, const ListAssignment& L) {
    json j;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    j["lists"] = json::array();
    for (const auto& l : L.lists) j["lists"].push_back(l.values);
    return j.dump();
}

ListAssignment assignment_from_json(const Graph& g, const std::string& text) {
    json j = json::parse(text);
    if (j.contains("edges")) {
        if (j["edges"].size() != static_cast<size_t>(g.edge_count()))
            throw std::invalid_argument("assignment edge count mismatch");
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            int ju = j["edges"][e][0], jv = j["edges"][e][1];
            if (std::minmax(ju, jv) != std::minmax(u, v))
                throw std::invalid_argument("assignment edges disagree with the graph");
        }
    }
    ListAssignment L;
    for (const auto& l : j.at("lists"))
        L.lists.push_back(ColorSet(l.get<std::vector<int>>()));
    if (L.edge_count() != g.edge_count())
        throw std::invalid_argument("assignment list count mismatch");
    return L;
}

std::string coloring_to_json(const SetColoring& phi) {
    json j;
    j["s"] = phi.target_size;
    j["chosen"] = json::array();
    for (const auto& c : phi.chosen) j["chosen"].push_back(c.values);
    return j.dump();
}

SetColoring coloring_from_json(const Graph& g, const std::string& text) {
    json j = json::parse(text);
    SetColoring phi;
    phi.target_size = j.at("s").get<int>();
    for (const auto& c : j.at("chosen"))
        phi.chosen.push_back(ColorSet(c.get<std::vector<int>>()));
    if (static_cast<int>(phi.chosen.size()) != g.edge_count())
        throw std::invalid_argument("coloring edge count mismatch");
    return phi;
}

std::string med_to_json(const MedDecomposition& d) {
    json j;
    j["G1"] = d.matching;
    j["G2"] = json::array();
    for (const auto& c : d.cycles) j["G2"].push_back(c.edges);
    j["G3"] = json::array();
    for (const auto& s : d.stars)
        j["G3"].push_back({{"center", s.center},
                           {"leaves", std::vector<EdgeId>(s.leaves.begin(), s.leaves.end())}});
    return j.dump();
}

MedDecomposition med_from_json(const Graph& g, const std::string& text) {
    json j = json::parse(text);
    MedDecomposition d;
    d.matching = j.at("G1").get<std::vector<EdgeId>>();
    for (const auto& c : j.at("G2"))
        d.cycles.push_back(make_cycle_trail(g, c.get<std::vector<EdgeId>>()));
    for (const auto& s : j.at("G3")) {
        DoubleStar star;
        star.center = s.at("center").get<EdgeId>();
        auto leaves = s.at("leaves").get<std::vector<EdgeId>>();
        if (leaves.size() != 4) throw std::invalid_argument("star needs four leaves");
        std::copy(leaves.begin(), leaves.end(), star.leaves.begin());
        d.stars.push_back(star);
    }
    return d;
}

std::string report_to_json(const RunReport& rep) {
    json j;
    j["command"] = rep.command;
    j["input_digest"] = rep.input_digest;
    j["outcome"] = rep.outcome;
    j["counts"] = {{"trials", rep.trials},
                   {"successes", rep.successes},
                   {"failures", rep.failures},
                   {"contract_gaps", rep.contract_gaps}};
    j["wall_ms"] = rep.wall_ms;
    j["seed"] = rep.seed;
    j["failure_detail"] = json::array();
    for (const auto& f : rep.failure_detail)
        j["failure_detail"].push_back(
            {{"trial", f.trial}, {"what", f.what}, {"contract_gap", f.contract_gap}});
    return j.dump(2);
}

std::string trace_to_json(const std::vector<TraceEvent>& trace) {
    json j = json::array();
    for (const auto& ev : trace)
        j.push_back({{"step", ev.step}, {"edge", ev.edge}, {"color", ev.color},
                     {"note", ev.note}});
    return j.dump(2);
}

}  // namespace choose72
