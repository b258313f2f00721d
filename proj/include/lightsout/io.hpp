#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lightsout/circuit.hpp"
#include "lightsout/colored.hpp"
#include "lightsout/game.hpp"
#include "lightsout/graph.hpp"

namespace lightsout {

using json = nlohmann::json;

/// {"n": int, "directed": bool, "edges": [[u, v], ...]} plus optional "labels".
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// A generator string ("grid:5x5"), a path to a graph JSON file, or inline JSON.
Graph load_graph(const std::string& source);

/// Bitstring of length n; "zeros" and "ones" expand to constant states.
BitVector parse_state(std::string_view s, std::size_t n);

/// {"presses": "010", "weight": 1}
json solution_to_json(const BitVector& presses, std::size_t weight);

/// {"k": 3, "values": [0, 2, 1]}
json colored_to_json(const ColoredState& s);
ColoredState colored_from_json(const json& j);
/// Inline JSON or a path to a JSON file.
ColoredState load_colored_state(const std::string& source);

json press_counts_to_json(const PressCounts& a);

/// Gates, nets and fan-in lists of the circuit realization.
json netlist_to_json(const Netlist& nl);

}  // namespace lightsout
