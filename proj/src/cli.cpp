#include "lightsout/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>

#include "lightsout/errors.hpp"
#include "lightsout/service.hpp"

namespace lightsout {

namespace {

struct Options {
  std::string graph;
  std::string variant = "classic";
  std::string from = "zeros";
  std::string to = "zeros";
  std::uint32_t k = 0;
  std::uint64_t budget = kDefaultCosetBudget;
  bool json_out = false;
  // special
  std::string kind = "inverting";
  bool all = false;
  // colored-solve
  std::string method = "auto";
  // circuit-check
  std::size_t presses = 50;
  std::uint64_t seed = 1;
  std::string netlist_path;
  // serve
  int port = 0;
  std::string snapshot;
};

struct Unsolvable {
  json payload;
  std::string text;
};

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.json_out)
    out << j.dump(2) << '\n';
  else
    out << text;
}

std::string join_rows(const std::vector<std::string>& rows) {
  std::string s;
  for (const auto& r : rows) s += "  " + r + '\n';
  return s;
}

// Comma-separated values, "zeros", or colored-state JSON (inline or file).
ColoredState colored_arg(const std::string& s, std::uint32_t k, std::size_t n) {
  ColoredState c;
  if (s == "zeros") {
    if (k == 0) throw std::invalid_argument("--k is required for \"zeros\"");
    c = make_colored_state(k, std::vector<std::uint32_t>(n, 0));
  } else if (!s.empty() && (s.find(',') != std::string::npos || std::isdigit(static_cast<unsigned char>(s[0]))) &&
             s.find_first_not_of("0123456789, ") == std::string::npos) {
    if (k == 0) throw std::invalid_argument("--k is required for plain value lists");
    std::vector<std::uint32_t> v;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) v.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    c = make_colored_state(k, std::move(v));
  } else {
    c = load_colored_state(s);
    if (k != 0 && c.k != k) throw std::invalid_argument("state modulus differs from --k");
  }
  if (c.values.size() != n)
    throw std::invalid_argument("colored state has " + std::to_string(c.values.size()) + " values, graph has " +
                                std::to_string(n) + " vertices");
  return c;
}

std::string values_text(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_gen(const Options& o, std::ostream& out) {
  out << graph_to_json(load_graph(o.graph)).dump(o.json_out ? -1 : 2) << '\n';
  return kExitOk;
}

int unsolvable(const Options& o, std::ostream& out, const BitVector& residual) {
  emit(out, o, {{"solvable", false}, {"residual", residual.to_string()}},
       "unsolvable\nresidual " + residual.to_string() + '\n');
  return kExitUnsolvable;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const GameSpec spec = compile(load_graph(o.graph), parse_variant(o.variant));
  const BitVector from = parse_state(o.from, spec.order()), to = parse_state(o.to, spec.order());
  auto sol = solve_game(spec, from, to);
  if (!sol) return unsolvable(o, out, invariant_value(spec, from ^ to));
  json j = solution_to_json(sol->presses, sol->weight);
  j["solvable"] = true;
  emit(out, o, j, "presses " + sol->presses.to_string() + "\nweight  " + std::to_string(sol->weight) + '\n');
  return kExitOk;
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const GameSpec spec = compile(load_graph(o.graph), parse_variant(o.variant));
  const BitVector state = parse_state(o.from, spec.order());
  const BitVector value = invariant_value(spec, state);
  const auto rows = spec.invariant().to_strings();
  emit(out, o,
       {{"invariant", rows}, {"rank", spec.rank()}, {"state", state.to_string()}, {"value", value.to_string()},
        {"solvable", value.none()}},
       "rank " + std::to_string(spec.rank()) + " of " + std::to_string(spec.order()) + "\nJ (" +
           std::to_string(rows.size()) + " rows)\n" + join_rows(rows) + "J*state " + value.to_string() + '\n');
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const GameSpec spec = compile(load_graph(o.graph), parse_variant(o.variant));
  const BitVector from = parse_state(o.from, spec.order()), to = parse_state(o.to, spec.order());
  const BitVector jf = invariant_value(spec, from), jt = invariant_value(spec, to);
  const bool eq = jf == jt;
  emit(out, o, {{"equivalent", eq}, {"from_value", jf.to_string()}, {"to_value", jt.to_string()}},
       std::string(eq ? "equivalent" : "not equivalent") + "\nJ*from " + jf.to_string() + "\nJ*to   " +
           jt.to_string() + '\n');
  return eq ? kExitOk : kExitUnsolvable;
}

int cmd_special(const Options& o, std::ostream& out) {
  const GameSpec spec = compile(load_graph(o.graph), parse_variant(o.variant));
  const SpecialKind kind = parse_special_kind(o.kind);
  const std::string name(to_string(kind));
  if (o.all) {
    const auto all = find_all_special(spec, kind);
    std::vector<std::string> rows;
    for (const auto& v : all) rows.push_back(v.to_string());
    emit(out, o, {{"kind", name}, {"count", rows.size()}, {"vectors", rows}},
         name + ": " + std::to_string(rows.size()) + " vectors\n" + join_rows(rows));
    return kExitOk;
  }
  auto v = find_special(spec, kind);
  if (!v) {
    emit(out, o, {{"kind", name}, {"vector", nullptr}}, "no nonzero " + name + " vector\n");
    return kExitUnsolvable;
  }
  emit(out, o, {{"kind", name}, {"vector", v->to_string()}, {"weight", v->popcount()}},
       name + " " + v->to_string() + '\n');
  return kExitOk;
}

int cmd_colored(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const ColoredState from = colored_arg(o.from, o.k, g.order());
  const ColoredState to = colored_arg(o.to, o.k == 0 ? from.k : o.k, g.order());
  if (from.k != to.k) throw std::invalid_argument("initial and target states use different k");

  std::string method = o.method;
  if (method == "auto") method = squarefree_factors(from.k) ? "squarefree" : "snf";
  std::optional<PressCounts> a;
  if (method == "squarefree")
    a = solve_squarefree(g, from, to);
  else if (method == "snf")
    a = solve_general(g, from, to);
  else
    throw std::invalid_argument("unknown method '" + o.method + "'");

  if (!a) {
    emit(out, o, {{"solvable", false}, {"k", from.k}, {"method", method}}, "unsolvable\n");
    return kExitUnsolvable;
  }
  json j = press_counts_to_json(*a);
  j["solvable"] = true;
  j["method"] = method;
  emit(out, o, j, "counts " + values_text(a->counts) + " (mod " + std::to_string(a->k) + ", " + method + ")\n");
  return kExitOk;
}

int cmd_min(const Options& o, std::ostream& out) {
  const GameSpec spec = compile(load_graph(o.graph), parse_variant(o.variant));
  const BitVector from = parse_state(o.from, spec.order()), to = parse_state(o.to, spec.order());
  auto r = min_weight_solution(spec.rule(), from ^ to, o.budget);
  if (!r) return unsolvable(o, out, invariant_value(spec, from ^ to));
  json j = solution_to_json(r->solution, r->weight);
  j["solvable"] = true;
  j["coset_size"] = r->coset_size;
  emit(out, o, j,
       "presses " + r->solution.to_string() + "\nweight  " + std::to_string(r->weight) + "\ncoset   " +
           std::to_string(r->coset_size) + '\n');
  return kExitOk;
}

int cmd_circuit(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const GameSpec spec = compile(g, Variant::classic());
  const Netlist nl = build_netlist(g);
  if (!o.netlist_path.empty()) {
    std::ofstream f(o.netlist_path);
    if (!f) throw std::invalid_argument("cannot write '" + o.netlist_path + "'");
    f << netlist_to_json(nl).dump(2) << '\n';
  }
  const std::size_t n = g.order();
  BitVector state = parse_state(o.from, n);
  CircuitState cs = initial_circuit_state(nl, state);
  std::mt19937_64 rng(o.seed);
  std::size_t step = 0;
  bool agree = true;
  if (n > 0) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (; step < o.presses; ++step) {
      const std::size_t v = pick(rng);
      state = press(spec, state, v);
      cs = simulate_press(nl, cs, v);
      if (!(cs.q == state)) {
        agree = false;
        break;
      }
    }
  }
  const std::size_t expected_fan_in = n + 2 * g.edge_count();
  agree = agree && nl.total_fan_in() == expected_fan_in;
  emit(out, o,
       {{"agree", agree},
        {"presses", step},
        {"state", state.to_string()},
        {"total_fan_in", nl.total_fan_in()},
        {"expected_fan_in", expected_fan_in}},
       std::string(agree ? "circuit agrees" : "circuit diverges") + " after " + std::to_string(step) +
           " presses\nfan-in " + std::to_string(nl.total_fan_in()) + " (expected " +
           std::to_string(expected_fan_in) + ")\n");
  return agree ? kExitOk : kExitUnsolvable;
}

int cmd_serve(const Options& o) {
  ServiceConfig c = config_from_env();
  if (o.port != 0) c.port = o.port;
  if (o.budget != kDefaultCosetBudget) c.budget = o.budget;
  if (!o.snapshot.empty()) c.snapshot_path = o.snapshot;
  return serve(c);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Lights Out solver"};
  app.name("lightsout");
  app.require_subcommand(1);

  auto add_graph = [&](CLI::App* s) { s->add_option("--graph", o.graph, "generator spec, graph JSON file or inline JSON")->required(); };
  auto add_variant = [&](CLI::App* s) { s->add_option("--variant", o.variant, "classic|second|neighborhood|nonreflexive:<mask>|asymmetric"); };
  auto add_states = [&](CLI::App* s) {
    s->add_option("--from", o.from, "initial state");
    s->add_option("--to", o.to, "target state");
  };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json_out, "JSON output"); };

  auto* gen = app.add_subcommand("gen", "emit graph JSON");
  add_graph(gen);
  add_json(gen);

  auto* solve = app.add_subcommand("solve", "presses taking --from to --to");
  auto* inv = app.add_subcommand("invariant", "separating invariant J and J*state");
  auto* check = app.add_subcommand("check", "are --from and --to equivalent");
  auto* min = app.add_subcommand("min-solve", "minimum-weight press set");
  for (auto* s : {solve, inv, check, min}) {
    add_graph(s);
    add_variant(s);
    add_json(s);
  }
  for (auto* s : {solve, check, min}) add_states(s);
  inv->add_option("--from,--state", o.from, "state to evaluate");
  min->add_option("--budget", o.budget, "largest coset to enumerate");

  auto* special = app.add_subcommand("special", "inverting, self-reproducing, self-avoiding or neutral vectors");
  add_graph(special);
  add_variant(special);
  add_json(special);
  special->add_option("--kind", o.kind, "inverting|self-reproducing|self-avoiding|neutral");
  special->add_flag("--all", o.all, "enumerate every vector of the kind");

  auto* colored = app.add_subcommand("colored-solve", "solve the k-color game");
  add_graph(colored);
  add_states(colored);
  add_json(colored);
  colored->add_option("--k", o.k, "number of colors");
  colored->add_option("--method", o.method, "auto|squarefree|snf");

  auto* circuit = app.add_subcommand("circuit-check", "compare the gate-level circuit with the algebra");
  add_graph(circuit);
  add_json(circuit);
  circuit->add_option("--from", o.from, "initial state");
  circuit->add_option("--presses", o.presses, "random presses to apply");
  circuit->add_option("--seed", o.seed, "press sequence seed");
  circuit->add_option("--export-netlist", o.netlist_path, "write the netlist JSON here");

  auto* srv = app.add_subcommand("serve", "run the HTTP service");
  srv->add_option("--port", o.port, "listen port (default LIGHTSOUT_PORT or 8080)");
  srv->add_option("--budget", o.budget, "coset budget for min hints");
  srv->add_option("--snapshot", o.snapshot, "session snapshot file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (inv->parsed()) return cmd_invariant(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (special->parsed()) return cmd_special(o, out);
    if (colored->parsed()) return cmd_colored(o, out);
    if (min->parsed()) return cmd_min(o, out);
    if (circuit->parsed()) return cmd_circuit(o, out);
    if (srv->parsed()) return cmd_serve(o);
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lightsout
