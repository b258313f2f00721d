#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lightsout/graph.hpp"
#include "lightsout/zlinalg.hpp"

namespace lightsout {

/// Colored lights over Z_k: every component lies in [0, k).
struct ColoredState {
  std::uint32_t k = 2;
  std::vector<std::uint32_t> values;

  friend bool operator==(const ColoredState&, const ColoredState&) = default;
};

/// How often each button is pressed, reduced mod k.
struct PressCounts {
  std::uint32_t k = 2;
  std::vector<std::uint32_t> counts;

  friend bool operator==(const PressCounts&, const PressCounts&) = default;
};

/// Validates k >= 2 and every component < k.
ColoredState make_colored_state(std::uint32_t k, std::vector<std::uint32_t> values);

/// Closed-neighborhood matrix N = A + I as integers.
IntMatrix closed_neighborhood_matrix(const Graph& g);

ColoredState press_colored(const Graph& g, const ColoredState& s, std::size_t vertex);
/// s + N a (mod k).
ColoredState apply_presses(const Graph& g, const ColoredState& s, const PressCounts& a);

/// Distinct prime factors, or nullopt if some prime divides k twice.
std::optional<std::vector<std::uint32_t>> squarefree_factors(std::uint32_t k);

/// Per-prime Gauss elimination recombined by CRT. Throws
/// std::invalid_argument when k is not squarefree.
std::optional<PressCounts> solve_squarefree(const Graph& g, const ColoredState& initial, const ColoredState& target);

/// Smith normal form of (N | kI); works for every k >= 2.
std::optional<PressCounts> solve_general(const Graph& g, const ColoredState& initial, const ColoredState& target);

bool solvable_colored(const Graph& g, const ColoredState& initial, const ColoredState& target);

}  // namespace lightsout
