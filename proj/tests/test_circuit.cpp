#include <doctest.h>

#include <random>

#include "lightsout/circuit.hpp"
#include "lightsout/game.hpp"
#include "oracles.hpp"

using namespace lightsout;

TEST_CASE("netlist structure") {
  auto p3 = build_netlist(path_graph(3));
  CHECK(p3.flipflops == 3);
  CHECK(p3.or_gates[0].inputs.size() == 2);
  CHECK(p3.or_gates[1].inputs.size() == 3);
  CHECK(p3.or_gates[2].inputs.size() == 2);
  auto k3 = build_netlist(complete_graph(3));
  for (std::size_t b = 0; b < 3; ++b) CHECK(k3.button_fanout[b] == std::vector<std::size_t>{0, 1, 2});
  auto one = build_netlist(Graph(1, {}));
  CHECK(one.buttons() == 1);
  CHECK(one.or_gates[0].inputs.size() == 1);
  CHECK_THROWS_AS(build_netlist(Graph(2, {{0, 1}}, true)), std::invalid_argument);
}

TEST_CASE("press examples") {
  auto nl = build_netlist(path_graph(3));
  auto s = initial_circuit_state(nl, BitVector(3));
  CHECK(simulate_press(nl, s, 1).q == BitVector::from_string("111"));
  CHECK(simulate_press(nl, simulate_press(nl, s, 2), 2).q == s.q);
  auto k3 = build_netlist(complete_graph(3));
  CHECK(simulate_press(k3, {BitVector::from_string("101")}, 2).q == BitVector::from_string("010"));
  CHECK_THROWS_AS(simulate_press(nl, s, 3), std::invalid_argument);
  CHECK_THROWS_AS(simulate_pulse(nl, s, BitVector::from_string("110")), std::invalid_argument);
  CHECK(simulate_pulse(nl, s, BitVector(3)).q == s.q);
}

TEST_CASE("circuit equals algebra") {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = oracle::random_graph(n, rng);
    const auto spec = compile(g, Variant::classic());
    const auto nl = build_netlist(g);
    CHECK(nl.total_fan_in() == n + 2 * g.edge_count());
    for (std::size_t i = 0; i < n; ++i) CHECK(nl.or_gates[i].inputs.size() == g.degree(i) + 1);
    auto x = oracle::random_vector(n, rng);
    auto cs = initial_circuit_state(nl, x);
    for (int step = 0; step < 50; ++step) {
      const std::size_t v = rng() % n;
      x = press(spec, x, v);
      cs = simulate_press(nl, cs, v);
      CHECK(cs.q == x);
    }
  }
}
