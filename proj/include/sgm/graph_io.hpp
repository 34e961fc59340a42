#pragma once

#include <string>

#include "sgm/signed_graph.hpp"

namespace sgm {

// Structured text for signed graphs:
//   {"vertices": ["v1", ...],
//    "edges": [{"label": "e1", "ends": ["v1", "v2"], "sign": "+",
//               "directions": [-1, 1]}, ...]}
// "directions" is optional on input. Output keeps the graph's vertex and edge
// order, so it is deterministic.
std::string graph_to_json(const SignedGraph& g);
SignedGraph graph_from_json(const std::string& text);

// Graphviz export: negative edges are dashed, edges are labelled by their
// groundset element.
std::string graph_to_dot(const SignedGraph& g, const std::string& name = "G");

// {"s1": ..., "s2": ..., "t1": ..., "t2": ..., "side": {"e1": 1, ...},
//  "roles": [{"edge": "e3", "end": 0, "role": "t1"}, ...]}
// "side" and "roles" are optional.
std::string split_to_json(const CylinderSplit& s);
CylinderSplit split_from_json(const std::string& text);

}  // namespace sgm
