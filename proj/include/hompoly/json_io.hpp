#pragma once

// JSON forms of graphs, polynomials, circuits, rotation systems, gadgets,
// classifications and reports. Readers validate and throw InvalidInput.

#include <string>

#include "json.hpp"

#include "hompoly/circuit.hpp"
#include "hompoly/gadgets.hpp"
#include "hompoly/graph.hpp"
#include "hompoly/poly.hpp"
#include "hompoly/reduce.hpp"
#include "hompoly/topo.hpp"

namespace hompoly {

using Json = nlohmann::ordered_json;

// {"n": int, "edges": [[i,j],...], "loops": [i,...], "labels": {"role": v}}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// [{"coeff": "p/q", "vars": [["e:0:1", 1], ...]}, ...] in canonical order.
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

// {"output": id, "oracles": [{"id", "params"}], "gates": [{"id", "kind", ...}]}
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

// {"<vertex>": [neighbours in cyclic order], ...}
Json rotation_to_json(const RotationSystem& r);
RotationSystem rotation_from_json(const Json& j);

Json gadget_to_json(const Gadget& g);

Json classification_to_json(const Classification& c, const Graph& h, const GraphClass& cls);

// Everything except wall time, so the output is byte-stable.
Json report_to_json(const ReductionReport& r, bool include_polynomials = false);

Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

}  // namespace hompoly
