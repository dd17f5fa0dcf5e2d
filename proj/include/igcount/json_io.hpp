#pragma once

#include <json.hpp>

#include "igcount/hierarchy.hpp"
#include "igcount/models.hpp"
#include "igcount/star.hpp"

namespace igcount {

using Json = nlohmann::json;

// Graph document:
//   {"vertices":[{"id":0,"label":"3/2"},...], "arcs":[[0,1],...]}
// Labels are integer strings, "p/q" fractions, or plain JSON integers.
InfluenceGraph graph_from_json(const Json& j);
Json graph_to_json(const InfluenceGraph& g);

// Model document: the graph fields plus
//   {"model":"golf"|"oblivious"|"nonoblivious", "r":"1/2",
//    "quota":3, "players":[...]}
// r only for golf, players only for the influence kinds.
DecisionModel model_from_json(const Json& j);
Json model_to_json(const DecisionModel& m);

// Compact star descriptor:
//   {"L":3,"I":1,"R":2,"F":1,"fc":3,"quota":4,
//    "zero_labels":{"L":0,"I":0,"R":0,"F":0},
//    "extension":{"u":0,"Fu":2}}
// Actor ids run leaders, independents, reciprocals, followers, center,
// pendants; zero-labelled members sit last inside their class.
StarGame star_from_descriptor(const Json& j);

Json decomposition_to_json(const HierarchicalDecomposition& d);

Json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j, int universe);

inline std::string big_str(const Big& b) { return b.get_str(); }

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);
std::string load_text_file(const std::string& path);

}  // namespace igcount
