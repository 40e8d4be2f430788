#pragma once

#include <string>

#include "choose72/chooser.hpp"
#include "choose72/color.hpp"
#include "choose72/decomposition.hpp"
#include "choose72/fuzz.hpp"
#include "choose72/graph.hpp"

namespace choose72 {

// JSON wire formats, all indexed by canonical EdgeId:
//   assignment: {"edges": [[u,v],...], "lists": [[c,...],...]}
//   coloring:   {"s": 2, "chosen": [[c1,c2],...]}
//   med:        {"G1":[eid,...], "G2":[[eid,...],...],
//                "G3":[{"center":eid,"leaves":[e,e,e,e]},...]}

std::string assignment_to_json(const Graph& g, const ListAssignment& L);
ListAssignment assignment_from_json(const Graph& g, const std::string& text);

std::string coloring_to_json(const SetColoring& phi);
SetColoring coloring_from_json(const Graph& g, const std::string& text);

std::string med_to_json(const MedDecomposition& d);
MedDecomposition med_from_json(const Graph& g, const std::string& text);

std::string report_to_json(const RunReport& rep);
std::string trace_to_json(const std::vector<TraceEvent>& trace);

}  // namespace choose72
