#pragma once

#include <string>
#include <vector>

#include "lightsout/bitvec.hpp"
#include "lightsout/graph.hpp"

namespace lightsout {

/// OR gate i drives the clock of T flip-flop i. Its inputs are the button
/// nets of v_i's closed neighborhood.
struct OrGate {
  std::vector<std::size_t> inputs;  // button indices, ascending
};

struct Netlist {
  std::size_t flipflops = 0;
  std::vector<OrGate> or_gates;
  /// button_fanout[j]: OR gates that button j feeds.
  std::vector<std::vector<std::size_t>> button_fanout;

  std::size_t buttons() const noexcept { return button_fanout.size(); }
  std::size_t total_fan_in() const noexcept;
};

struct CircuitState {
  BitVector q;
};

/// Throws std::invalid_argument for directed graphs.
Netlist build_netlist(const Graph& g);

CircuitState initial_circuit_state(const Netlist& nl, const BitVector& q);

/// One clock pulse. `buttons` marks the buttons held during the pulse; only
/// a single button is accepted because the OR gates would merge overlapping
/// pulses into one toggle.
CircuitState simulate_pulse(const Netlist& nl, const CircuitState& s, const BitVector& buttons);
CircuitState simulate_press(const Netlist& nl, const CircuitState& s, std::size_t button);

}  // namespace lightsout
