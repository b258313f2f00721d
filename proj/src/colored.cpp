#include "lightsout/colored.hpp"

#include <stdexcept>
#include <string>

namespace lightsout {

ColoredState make_colored_state(std::uint32_t k, std::vector<std::uint32_t> values) {
  if (k < 2) throw std::invalid_argument("color count k must be at least 2");
  for (auto v : values)
    if (v >= k) throw std::invalid_argument("color " + std::to_string(v) + " out of range for k = " + std::to_string(k));
  return {k, std::move(values)};
}

IntMatrix closed_neighborhood_matrix(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("colored game needs an undirected graph");
  IntMatrix n = IntMatrix::identity(g.order());
  for (auto [u, v] : g.edges()) {
    n(u, v) = 1;
    n(v, u) = 1;
  }
  return n;
}

namespace {

void require_state(const Graph& g, const ColoredState& s) {
  if (g.directed()) throw std::invalid_argument("colored game needs an undirected graph");
  if (s.k < 2) throw std::invalid_argument("color count k must be at least 2");
  if (s.values.size() != g.order())
    throw std::invalid_argument("colored state has " + std::to_string(s.values.size()) + " values, graph has " +
                                std::to_string(g.order()) + " vertices");
  for (auto v : s.values)
    if (v >= s.k) throw std::invalid_argument("colored state component out of range");
}

void require_pair(const Graph& g, const ColoredState& i, const ColoredState& f) {
  require_state(g, i);
  require_state(g, f);
  if (i.k != f.k) throw std::invalid_argument("initial and target states use different k");
}

// c = f - i (mod k), componentwise.
IntVector difference(const ColoredState& i, const ColoredState& f) {
  IntVector c(i.values.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = (f.values[j] + i.k - i.values[j]) % i.k;
  return c;
}

std::uint32_t mod_k(const Integer& v, std::uint32_t k) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), k));
}

}  // namespace

ColoredState press_colored(const Graph& g, const ColoredState& s, std::size_t vertex) {
  require_state(g, s);
  if (vertex >= g.order()) throw std::invalid_argument("vertex " + std::to_string(vertex) + " out of range");
  ColoredState out = s;
  auto bump = [&](std::size_t v) { out.values[v] = (out.values[v] + 1) % s.k; };
  bump(vertex);
  for (auto w : g.neighbors(vertex)) bump(w);
  return out;
}

ColoredState apply_presses(const Graph& g, const ColoredState& s, const PressCounts& a) {
  require_state(g, s);
  if (a.k != s.k || a.counts.size() != g.order()) throw std::invalid_argument("press counts do not match state");
  ColoredState out = s;
  for (std::size_t j = 0; j < g.order(); ++j) {
    const std::uint64_t c = a.counts[j] % s.k;
    auto add = [&](std::size_t v) { out.values[v] = static_cast<std::uint32_t>((out.values[v] + c) % s.k); };
    add(j);
    for (auto w : g.neighbors(j)) add(w);
  }
  return out;
}

std::optional<std::vector<std::uint32_t>> squarefree_factors(std::uint32_t k) {
  std::vector<std::uint32_t> primes;
  std::uint64_t rest = k;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d) continue;
    rest /= d;
    if (rest % d == 0) return std::nullopt;
    primes.push_back(static_cast<std::uint32_t>(d));
  }
  if (rest > 1) primes.push_back(static_cast<std::uint32_t>(rest));
  return primes;
}

std::optional<PressCounts> solve_squarefree(const Graph& g, const ColoredState& initial, const ColoredState& target) {
  require_pair(g, initial, target);
  const std::uint32_t k = initial.k;
  const auto primes = squarefree_factors(k);
  if (!primes)
    throw std::invalid_argument("k = " + std::to_string(k) + " is not squarefree; use the Smith-form solver");
  const IntMatrix n = closed_neighborhood_matrix(g);
  const IntVector c = difference(initial, target);

  IntVector a(g.order(), Integer(0));
  for (std::uint32_t p : *primes) {
    auto b = solve_mod_p(n, c, p);
    if (!b) return std::nullopt;
    const Integer cofactor = k / p;
    // r*p + s*cofactor = 1, so s*cofactor is 1 mod p and 0 mod every other prime.
    const ExtGcd e = ext_gcd(Integer(p), cofactor);
    const Integer weight = e.t * cofactor;
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += (*b)[j] * weight;
  }
  PressCounts out{k, std::vector<std::uint32_t>(g.order())};
  for (std::size_t j = 0; j < a.size(); ++j) out.counts[j] = mod_k(a[j], k);
  return out;
}

std::optional<PressCounts> solve_general(const Graph& g, const ColoredState& initial, const ColoredState& target) {
  require_pair(g, initial, target);
  const std::uint32_t k = initial.k;
  const std::size_t n = g.order();
  const IntMatrix nm = closed_neighborhood_matrix(g);

  IntMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = nm(i, j);
    m(i, n + i) = k;
  }
  const SmithDecomposition snf = smith_normal_form(m);
  const IntVector uc = snf.U * difference(initial, target);

  IntVector y(2 * n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = snf.B(i, i);
    if (d == 0) {
      if (uc[i] != 0) return std::nullopt;
      continue;
    }
    if (uc[i] % d != 0) return std::nullopt;
    y[i] = uc[i] / d;
  }
  const IntVector abar = snf.V * y;
  PressCounts out{k, std::vector<std::uint32_t>(n)};
  for (std::size_t j = 0; j < n; ++j) out.counts[j] = mod_k(abar[j], k);
  return out;
}

bool solvable_colored(const Graph& g, const ColoredState& initial, const ColoredState& target) {
  return solve_general(g, initial, target).has_value();
}

}  // namespace lightsout
