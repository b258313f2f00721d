#include "lightsout/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace lightsout {

std::size_t Netlist::total_fan_in() const noexcept {
  std::size_t n = 0;
  for (const auto& g : or_gates) n += g.inputs.size();
  return n;
}

Netlist build_netlist(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("circuit realization needs an undirected graph");
  const std::size_t n = g.order();
  Netlist nl{n, std::vector<OrGate>(n), std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    auto& in = nl.or_gates[i].inputs;
    in.push_back(i);
    for (auto j : g.neighbors(i)) in.push_back(j);
    std::sort(in.begin(), in.end());
    for (auto b : in) nl.button_fanout[b].push_back(i);
  }
  for (auto& f : nl.button_fanout) std::sort(f.begin(), f.end());
  return nl;
}

CircuitState initial_circuit_state(const Netlist& nl, const BitVector& q) {
  if (q.size() != nl.flipflops) throw std::invalid_argument("initial state length does not match flip-flop count");
  return {q};
}

CircuitState simulate_pulse(const Netlist& nl, const CircuitState& s, const BitVector& buttons) {
  if (s.q.size() != nl.flipflops) throw std::invalid_argument("circuit state length does not match netlist");
  if (buttons.size() != nl.buttons()) throw std::invalid_argument("button vector length does not match netlist");
  if (buttons.popcount() > 1) throw std::invalid_argument("simultaneous button presses are not supported");
  CircuitState out = s;
  for (std::size_t i = 0; i < nl.or_gates.size(); ++i) {
    bool clock = false;
    for (auto b : nl.or_gates[i].inputs) clock = clock || buttons.get(b);
    if (clock) out.q.flip(i);  // T flip-flop toggles on the pulse
  }
  return out;
}

CircuitState simulate_press(const Netlist& nl, const CircuitState& s, std::size_t button) {
  if (button >= nl.buttons()) throw std::invalid_argument("button " + std::to_string(button) + " out of range");
  return simulate_pulse(nl, s, BitVector::unit(nl.buttons(), button));
}

}  // namespace lightsout
