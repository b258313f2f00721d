#include "lightsout/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "lightsout/errors.hpp"

namespace lightsout {

Variant parse_variant(std::string_view s) {
  if (s == "classic") return Variant::classic();
  if (s == "second" || s == "second-neighbors") return Variant::second_neighbors();
  if (s == "neighborhood") return Variant::neighborhood();
  if (s == "asymmetric") return Variant::asymmetric();
  constexpr std::string_view prefix = "nonreflexive:";
  if (s.substr(0, prefix.size()) == prefix) return Variant::non_reflexive(BitVector::from_string(s.substr(prefix.size())));
  if (s == "nonreflexive") throw std::invalid_argument("nonreflexive variant needs a diagonal mask: nonreflexive:<bits>");
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

std::string to_string(const Variant& v) {
  switch (v.kind) {
    case VariantKind::Classic: return "classic";
    case VariantKind::SecondNeighbors: return "second";
    case VariantKind::Neighborhood: return "neighborhood";
    case VariantKind::NonReflexive: return "nonreflexive:" + v.diag_mask.to_string();
    case VariantKind::Asymmetric: return "asymmetric";
  }
  return "classic";
}

namespace {

DegreeParity require_parity(const Graph& g, const char* variant) {
  const DegreeParity p = degree_parity(g);
  if (p == DegreeParity::Mixed)
    throw UnsupportedGraph(std::string(variant) +
                           " variant needs all degrees even (or zero) or all degrees odd");
  return p;
}

// The derived game graph must be loop-free: its adjacency is rule + I.
void assert_loop_free(const BitMatrix& rule) {
  const BitVector d = rule.diagonal_vector();
  if (d != BitVector::ones(d.size())) throw InvariantViolation("derived game graph has a loop");
}

}  // namespace

BitMatrix rule_matrix(const Graph& g, const Variant& v) {
  const std::size_t n = g.order();
  if ((v.kind == VariantKind::Asymmetric) != g.directed())
    throw DirectednessMismatch(v.kind == VariantKind::Asymmetric
                                   ? "asymmetric variant needs a directed graph"
                                   : to_string(v) + " variant needs an undirected graph");
  const BitMatrix a = adjacency_matrix(g);
  const BitMatrix id = BitMatrix::identity(n);
  switch (v.kind) {
    case VariantKind::Classic: return a + id;
    case VariantKind::SecondNeighbors: {
      const DegreeParity p = require_parity(g, "second-neighbors");
      BitMatrix m = a * a;
      if (p == DegreeParity::AllEvenOrZero) m += id;
      assert_loop_free(m);
      return m;
    }
    case VariantKind::Neighborhood: {
      const DegreeParity p = require_parity(g, "neighborhood");
      BitMatrix m = a + a * a;
      if (p == DegreeParity::AllEvenOrZero) m += id;
      assert_loop_free(m);
      return m;
    }
    case VariantKind::NonReflexive:
      if (v.diag_mask.size() != n)
        throw std::invalid_argument("diagonal mask length " + std::to_string(v.diag_mask.size()) +
                                    " does not match graph order " + std::to_string(n));
      return a + BitMatrix::diagonal(v.diag_mask);
    case VariantKind::Asymmetric: return (a + id).transpose();
  }
  throw std::invalid_argument("unknown variant");
}

GameSpec compile(const Graph& g, const Variant& v) {
  GameSpec s;
  s.graph_ = g;
  s.variant_ = v;
  s.rule_ = rule_matrix(g, v);
  s.echelon_ = row_reduce(s.rule_);
  const auto basis = kernel_basis(s.rule_.transpose());
  s.invariant_ = forward_echelon(BitMatrix::from_rows(basis, g.order()));
  if (!(s.invariant_ * s.rule_).is_zero()) throw InvariantViolation("J * M != 0");
  return s;
}

namespace {

void require_state(const GameSpec& spec, const BitVector& x, const char* what) {
  if (x.size() != spec.order())
    throw std::invalid_argument(std::string(what) + " has length " + std::to_string(x.size()) +
                                ", graph has " + std::to_string(spec.order()) + " vertices");
}

}  // namespace

BitVector press(const GameSpec& spec, const BitVector& state, std::size_t vertex) {
  require_state(spec, state, "state");
  if (vertex >= spec.order()) throw std::invalid_argument("vertex " + std::to_string(vertex) + " out of range");
  BitVector out = state;
  for (std::size_t r = 0; r < spec.order(); ++r)
    if (spec.rule().get(r, vertex)) out.flip(r);
  return out;
}

BitVector apply_buttons(const GameSpec& spec, const BitVector& state, const BitVector& presses) {
  require_state(spec, state, "state");
  require_state(spec, presses, "press vector");
  return state ^ (spec.rule() * presses);
}

BitVector invariant_value(const GameSpec& spec, const BitVector& state) {
  require_state(spec, state, "state");
  return spec.invariant() * state;
}

bool equivalent(const GameSpec& spec, const BitVector& initial, const BitVector& target) {
  require_state(spec, initial, "initial state");
  require_state(spec, target, "target state");
  return invariant_value(spec, initial) == invariant_value(spec, target);
}

std::optional<Solution> solve_game(const GameSpec& spec, const BitVector& initial, const BitVector& target) {
  require_state(spec, initial, "initial state");
  require_state(spec, target, "target state");
  auto a = solve(spec.echelon(), initial ^ target);
  if (!a) return std::nullopt;
  const std::size_t w = a->popcount();
  return Solution{std::move(*a), w};
}

std::string_view to_string(SpecialKind k) {
  switch (k) {
    case SpecialKind::Inverting: return "inverting";
    case SpecialKind::SelfReproducing: return "self-reproducing";
    case SpecialKind::SelfAvoiding: return "self-avoiding";
    case SpecialKind::Neutral: return "neutral";
  }
  return "inverting";
}

SpecialKind parse_special_kind(std::string_view s) {
  for (auto k : {SpecialKind::Inverting, SpecialKind::SelfReproducing, SpecialKind::SelfAvoiding,
                 SpecialKind::Neutral})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown special kind '" + std::string(s) + "'");
}

namespace {

void require_classic(const GameSpec& spec) {
  if (spec.variant().kind != VariantKind::Classic)
    throw UnsupportedVariant("special vectors are defined for the classic variant only");
}

// Matrix and right-hand side whose solution set is the given kind.
struct SpecialSystem {
  BitMatrix matrix;
  BitVector rhs;
};

SpecialSystem system_for(const GameSpec& spec, SpecialKind kind) {
  const std::size_t n = spec.order();
  switch (kind) {
    case SpecialKind::Inverting: return {spec.rule(), BitVector::ones(n)};
    case SpecialKind::SelfReproducing: return {adjacency_matrix(spec.graph()), BitVector(n)};
    case SpecialKind::SelfAvoiding: return {adjacency_matrix(spec.graph()), BitVector::ones(n)};
    case SpecialKind::Neutral: return {spec.rule(), BitVector(n)};
  }
  throw std::invalid_argument("unknown special kind");
}

bool is_linear(SpecialKind k) { return k == SpecialKind::SelfReproducing || k == SpecialKind::Neutral; }

}  // namespace

std::optional<BitVector> find_special(const GameSpec& spec, SpecialKind kind) {
  require_classic(spec);
  const auto sys = system_for(spec, kind);
  if (is_linear(kind)) {
    auto basis = kernel_basis(sys.matrix);
    if (basis.empty()) return std::nullopt;
    return basis.front();
  }
  auto x = solve(sys.matrix, sys.rhs);
  if (kind == SpecialKind::Inverting && !x)
    throw InvariantViolation("no inverting vector although every state can be inverted");
  return x;
}

std::vector<BitVector> find_all_special(const GameSpec& spec, SpecialKind kind) {
  require_classic(spec);
  if (spec.order() > kEnumerateAllMaxOrder)
    throw std::invalid_argument("enumerate-all mode is limited to " + std::to_string(kEnumerateAllMaxOrder) +
                                " vertices");
  const auto sys = system_for(spec, kind);
  const EchelonForm ef = row_reduce(sys.matrix);
  auto base = solve(ef, sys.rhs);
  if (!base) return {};
  const auto basis = kernel_basis(ef);
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << basis.size());
  BitVector x = *base;
  out.push_back(x);
  for (std::size_t t = 1; t < (std::size_t{1} << basis.size()); ++t) {
    x ^= basis[static_cast<std::size_t>(std::countr_zero(t))];
    out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](const BitVector& a, const BitVector& b) { return a.numeric_less(b); });
  return out;
}

bool is_special(const GameSpec& spec, const BitVector& x, SpecialKind kind) {
  require_classic(spec);
  require_state(spec, x, "vector");
  const auto sys = system_for(spec, kind);
  return sys.matrix * x == sys.rhs;
}

bool check_closure(const GameSpec& spec, std::span<const Witness> witnesses) {
  require_classic(spec);
  std::size_t inv = 0, sr = 0, sa = 0, neu = 0;
  BitVector sum(spec.order());
  for (const auto& w : witnesses) {
    if (!is_special(spec, w.vector, w.kind)) return false;
    sum ^= w.vector;
    switch (w.kind) {
      case SpecialKind::Inverting: ++inv; break;
      case SpecialKind::SelfReproducing: ++sr; break;
      case SpecialKind::SelfAvoiding: ++sa; break;
      case SpecialKind::Neutral: ++neu; break;
    }
  }
  std::optional<SpecialKind> expected;
  if (inv == 0 && neu == 0) {
    if (sr == 0 && sa % 2 == 0) expected = SpecialKind::SelfReproducing;
    else if (sa == 0) expected = SpecialKind::SelfReproducing;
    else if (sa == 1) expected = SpecialKind::SelfAvoiding;
  } else if (inv == 0 && sr == 0 && sa == 0) {
    expected = SpecialKind::Neutral;
  } else if (neu == 1 && sr == 0 && sa == 0 && inv % 2 == 0) {
    expected = SpecialKind::Neutral;
  }
  if (!expected) throw std::invalid_argument("no closure rule covers this combination of kinds");
  return is_special(spec, sum, *expected);
}

BitVector map_special_set(const GameSpec& spec, const BitVector& x, const Permutation& p) {
  require_state(spec, x, "vector");
  if (!is_automorphism(spec.graph(), p)) throw std::invalid_argument("permutation is not a graph automorphism");
  return p.apply(x);
}

Solution diagonal_reachability(const GameSpec& spec) {
  if (spec.variant().kind != VariantKind::NonReflexive)
    throw UnsupportedVariant("diagonal reachability applies to the non-reflexive variant");
  auto a = solve(spec.echelon(), spec.variant().diag_mask);
  if (!a) throw InvariantViolation("diagonal vector is not in the column space of the rule matrix");
  const std::size_t w = a->popcount();
  return {std::move(*a), w};
}

}  // namespace lightsout
