#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lightsout/bitvec.hpp"
#include "lightsout/f2linalg.hpp"
#include "lightsout/graph.hpp"

namespace lightsout {

enum class VariantKind { Classic, SecondNeighbors, Neighborhood, NonReflexive, Asymmetric };

struct Variant {
  VariantKind kind = VariantKind::Classic;
  /// NonReflexive only: bit i set means button i still toggles its own light.
  BitVector diag_mask;

  static Variant classic() { return {}; }
  static Variant second_neighbors() { return {VariantKind::SecondNeighbors, {}}; }
  static Variant neighborhood() { return {VariantKind::Neighborhood, {}}; }
  static Variant non_reflexive(BitVector mask) { return {VariantKind::NonReflexive, std::move(mask)}; }
  static Variant asymmetric() { return {VariantKind::Asymmetric, {}}; }

  friend bool operator==(const Variant&, const Variant&) = default;
};

/// "classic", "second", "neighborhood", "nonreflexive:<mask>", "asymmetric".
Variant parse_variant(std::string_view s);
std::string to_string(const Variant& v);

/// A graph compiled under a variant. Column j of `rule` is the toggle
/// pattern of button j; rows of `invariant` span ker(rule^T), so
/// invariant * rule == 0.
class GameSpec {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const Variant& variant() const noexcept { return variant_; }
  const BitMatrix& rule() const noexcept { return rule_; }
  const BitMatrix& invariant() const noexcept { return invariant_; }
  const EchelonForm& echelon() const noexcept { return echelon_; }
  std::size_t order() const noexcept { return graph_.order(); }
  std::size_t rank() const noexcept { return echelon_.rank; }

  friend GameSpec compile(const Graph& g, const Variant& v);

 private:
  Graph graph_;
  Variant variant_;
  BitMatrix rule_;
  BitMatrix invariant_;
  EchelonForm echelon_;
};

/// Throws UnsupportedGraph for a Mixed-parity graph under a parity-gated
/// variant and DirectednessMismatch when the graph kind does not fit.
GameSpec compile(const Graph& g, const Variant& v);

/// Rule matrix alone (no invariant); same preconditions as compile.
BitMatrix rule_matrix(const Graph& g, const Variant& v);

struct Solution {
  BitVector presses;
  std::size_t weight = 0;
};

BitVector press(const GameSpec& spec, const BitVector& state, std::size_t vertex);
BitVector apply_buttons(const GameSpec& spec, const BitVector& state, const BitVector& presses);

/// J * state.
BitVector invariant_value(const GameSpec& spec, const BitVector& state);
bool equivalent(const GameSpec& spec, const BitVector& initial, const BitVector& target);
std::optional<Solution> solve_game(const GameSpec& spec, const BitVector& initial, const BitVector& target);

enum class SpecialKind { Inverting, SelfReproducing, SelfAvoiding, Neutral };

std::string_view to_string(SpecialKind k);
SpecialKind parse_special_kind(std::string_view s);

/// Largest order for which find_all_special enumerates.
inline constexpr std::size_t kEnumerateAllMaxOrder = 20;

/// Canonical representative (Classic variant only; UnsupportedVariant otherwise).
/// Inverting always exists; the linear kinds return a nonzero vector or nothing.
std::optional<BitVector> find_special(const GameSpec& spec, SpecialKind kind);

/// Every vector of the given kind, sorted numerically. The linear kinds
/// include 0. Requires order <= kEnumerateAllMaxOrder.
std::vector<BitVector> find_all_special(const GameSpec& spec, SpecialKind kind);

bool is_special(const GameSpec& spec, const BitVector& x, SpecialKind kind);

struct Witness {
  SpecialKind kind;
  BitVector vector;
};

/// Checks the closure rule that applies to this multiset of kinds against
/// the sum of the witnesses. Returns false if a witness is not of its
/// declared kind or the sum is not of the predicted kind; throws
/// std::invalid_argument if no rule covers the combination.
bool check_closure(const GameSpec& spec, std::span<const Witness> witnesses);

/// Image of a special set under an automorphism: y = P^T x.
BitVector map_special_set(const GameSpec& spec, const BitVector& x, const Permutation& p);

/// NonReflexive only: presses reaching the diagonal vector from all-off.
Solution diagonal_reachability(const GameSpec& spec);

}  // namespace lightsout
