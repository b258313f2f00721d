#include "lightsout/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lightsout {

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json j = {{"n", g.order()}, {"directed", g.directed()}, {"edges", std::move(edges)}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const bool directed = j.value("directed", false);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair [u, v]");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    Graph g(n, std::move(edges), directed);
    if (j.contains("labels")) g.set_labels(j["labels"].get<std::vector<std::string>>());
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid ") + what + " JSON: " + e.what());
  }
}

bool looks_inline(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\n");
  return p != std::string::npos && s[p] == '{';
}

}  // namespace

Graph load_graph(const std::string& source) {
  if (looks_inline(source)) return graph_from_json(parse_json(source, "graph"));
  if (std::filesystem::exists(source)) return graph_from_json(parse_json(read_file(source), "graph"));
  return generate(source);
}

BitVector parse_state(std::string_view s, std::size_t n) {
  if (s == "zeros") return BitVector(n);
  if (s == "ones") return BitVector::ones(n);
  BitVector v = BitVector::from_string(s);
  if (v.size() != n)
    throw std::invalid_argument("state '" + std::string(s) + "' has length " + std::to_string(v.size()) +
                                ", graph has " + std::to_string(n) + " vertices");
  return v;
}

json solution_to_json(const BitVector& presses, std::size_t weight) {
  return {{"presses", presses.to_string()}, {"weight", weight}};
}

json colored_to_json(const ColoredState& s) { return {{"k", s.k}, {"values", s.values}}; }

ColoredState colored_from_json(const json& j) {
  try {
    return make_colored_state(j.at("k").get<std::uint32_t>(), j.at("values").get<std::vector<std::uint32_t>>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed colored state JSON: ") + e.what());
  }
}

ColoredState load_colored_state(const std::string& source) {
  if (looks_inline(source)) return colored_from_json(parse_json(source, "colored state"));
  return colored_from_json(parse_json(read_file(source), "colored state"));
}

json press_counts_to_json(const PressCounts& a) { return {{"k", a.k}, {"counts", a.counts}}; }

json netlist_to_json(const Netlist& nl) {
  json buttons = json::array(), gates = json::array(), ffs = json::array(), nets = json::array();
  for (std::size_t b = 0; b < nl.buttons(); ++b) {
    const std::string name = "B" + std::to_string(b);
    buttons.push_back(name);
    json sinks = json::array();
    for (auto g : nl.button_fanout[b]) sinks.push_back("or" + std::to_string(g));
    nets.push_back({{"name", name}, {"driver", name}, {"sinks", sinks}});
  }
  for (std::size_t i = 0; i < nl.or_gates.size(); ++i) {
    json inputs = json::array();
    for (auto b : nl.or_gates[i].inputs) inputs.push_back("B" + std::to_string(b));
    const std::string gate = "or" + std::to_string(i), clk = "C" + std::to_string(i);
    gates.push_back({{"name", gate},
                     {"type", "OR"},
                     {"inputs", inputs},
                     {"fan_in", nl.or_gates[i].inputs.size()},
                     {"output", clk}});
    ffs.push_back({{"name", "T" + std::to_string(i)}, {"type", "TFF"}, {"clock", clk}, {"q", "Q" + std::to_string(i)}});
    nets.push_back({{"name", clk}, {"driver", gate}, {"sinks", json::array({"T" + std::to_string(i)})}});
  }
  return {{"buttons", buttons}, {"or_gates", gates}, {"flipflops", ffs}, {"nets", nets},
          {"total_fan_in", nl.total_fan_in()}};
}

}  // namespace lightsout
