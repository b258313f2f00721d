// One line per acceptance criterion; exit status is nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "lightsout/circuit.hpp"
#include "lightsout/colored.hpp"
#include "lightsout/f2linalg.hpp"
#include "lightsout/game.hpp"
#include "lightsout/minweight.hpp"
#include "lightsout/zlinalg.hpp"
#include "oracles.hpp"

using namespace lightsout;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("[%s] %-22s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
  std::fflush(stdout);
  failures += !o.pass;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome fredholm() {
  std::mt19937_64 rng(1001);
  const auto t0 = Clock::now();
  int mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10;
    const BitMatrix m = oracle::random_matrix(r, c, rng, 0.15 + 0.7 * (t % 10) / 9.0);
    const auto img = oracle::image(m);
    const auto adj = kernel_basis(m.transpose());
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << r); ++b) {
      const BitVector bv = oracle::from_u64(b, r);
      bool perp = true;
      for (const auto& v : adj) perp = perp && !dot(bv, v);
      if (perp != (img.count(b) == 1)) ++mismatches;
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 10.0, fmt("1000 matrices, %d mismatches, %.2f s of 10 s", mismatches, secs)};
}

Outcome separating() {
  std::mt19937_64 rng(1002);
  int disagreements = 0, pairs = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 12;
    Graph g;
    Variant v;
    switch (t % 5) {
      case 0:
        g = oracle::random_graph(n, rng);
        v = Variant::classic();
        break;
      case 1:
        g = oracle::random_graph(n, rng);
        v = Variant::non_reflexive(oracle::random_vector(n, rng));
        break;
      case 2:
        g = oracle::random_digraph(n, rng);
        v = Variant::asymmetric();
        break;
      default: {
        const bool odd = rng() & 1u;
        if (odd && n % 2) ++n;
        g = oracle::random_parity_graph(n, odd, rng);
        v = t % 5 == 3 ? Variant::second_neighbors() : Variant::neighborhood();
      }
    }
    const auto spec = compile(g, v);
    // reachable differences from all 2^n press vectors
    const auto img = oracle::image(spec.rule());
    for (int q = 0; q < 50; ++q) {
      const auto i = oracle::random_vector(n, rng);
      // half the targets are drawn from the reachable set so both verdicts occur
      BitVector f = oracle::random_vector(n, rng);
      if (q % 2) f = i ^ oracle::mul(spec.rule(), oracle::random_vector(n, rng));
      const bool reach = img.count(oracle::to_u64(i ^ f)) == 1;
      disagreements += equivalent(spec, i, f) != reach;
      ++pairs;
    }
  }
  return {disagreements == 0, fmt("200 games x 50 pairs, %d disagreements of %d", disagreements, pairs)};
}

Outcome inversion() {
  std::mt19937_64 rng(1003);
  int solved = 0, odd_kernel = 0, kernel_checked = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 40;
    const Graph g = oracle::random_graph(n, rng, 0.05 + 0.9 * (rng() % 100) / 100.0);
    const auto spec = compile(g, Variant::classic());
    const auto x = oracle::random_vector(n, rng);
    const auto s = solve_game(spec, x, x ^ BitVector::ones(n));
    if (s && oracle::mul(oracle::closed(g), s->presses) == BitVector::ones(n)) ++solved;
    const auto kb = kernel_basis(spec.rule());
    const std::size_t span = kb.size() <= 12 ? std::size_t{1} << kb.size() : 0;
    for (const auto& k : kb) odd_kernel += k.popcount() % 2;
    for (std::size_t s2 = 0; s2 < span; ++s2) {
      BitVector v(n);
      for (std::size_t i = 0; i < kb.size(); ++i)
        if ((s2 >> i) & 1u) v ^= kb[i];
      odd_kernel += v.popcount() % 2;
      ++kernel_checked;
    }
  }
  return {solved == 500 && odd_kernel == 0,
          fmt("%d/500 inverted, %d kernel vectors checked, %d of odd weight", solved, kernel_checked, odd_kernel)};
}

Outcome complete_rank() {
  int bad = 0;
  for (std::size_t n = 2; n <= 10; ++n) {
    const Graph g = complete_graph(n);
    if (compile(g, Variant::classic()).rank() != 1) ++bad;
    if (oracle::image(oracle::closed(g)).size() != 2) ++bad;  // rank 1 <=> image {0, 1}
  }
  return {bad == 0, fmt("n = 2..10, %d deviations", bad)};
}

Outcome grid_constants() {
  const auto t0 = Clock::now();
  const auto spec = compile(grid_graph(5, 5), Variant::classic());
  const std::size_t rk = spec.rank();
  const auto kb = kernel_basis(spec.rule());
  const auto r = min_weight_solution(spec.rule(), BitVector::ones(25));
  const double secs = seconds_since(t0);
  // independent check of the minimum over the four coset points
  std::size_t best = 99;
  if (r && kb.size() == 2)
    for (int s = 0; s < 4; ++s) {
      BitVector v = r->solution;
      if (s & 1) v ^= kb[0];
      if (s & 2) v ^= kb[1];
      if (oracle::mul(oracle::closed(grid_graph(5, 5)), v) == BitVector::ones(25)) best = std::min(best, v.popcount());
    }
  const bool ok = rk == 23 && kb.size() == 2 && r && r->weight == 15 && r->coset_size == 4 && best == 15 && secs < 1.0;
  return {ok, fmt("rank %zu, kernel dim %zu, min weight %zu, coset %llu, %.4f s of 1 s", rk, kb.size(),
                  r ? r->weight : 0, r ? static_cast<unsigned long long>(r->coset_size) : 0ull, secs)};
}

bool connected(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.order();
}

Outcome colored_oracle() {
  int disagreements = 0, bad_solutions = 0, graphs = 0;
  long instances = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Edge> all;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1u) e.push_back(all[i]);
      const Graph g(n, e);
      if (!connected(g)) continue;
      ++graphs;
      for (std::uint32_t k = 2; k <= 6; ++k) {
        const auto img = oracle::colored_image(g, k);
        const bool sqf = squarefree_factors(k).has_value();
        std::vector<std::uint32_t> c(n, 0);
        const ColoredState zero = make_colored_state(k, std::vector<std::uint32_t>(n, 0));
        for (;;) {
          const ColoredState f = make_colored_state(k, c);
          const bool reach = img.count(oracle::encode(c, k)) == 1;
          const auto a = solve_general(g, zero, f);
          disagreements += bool(a) != reach;
          if (a && !(apply_presses(g, zero, *a) == f)) ++bad_solutions;
          if (sqf) {
            const auto b = solve_squarefree(g, zero, f);
            disagreements += bool(b) != reach;
            if (b && !(apply_presses(g, zero, *b) == f)) ++bad_solutions;
          }
          ++instances;
          std::size_t i = 0;
          while (i < n && ++c[i] == k) c[i++] = 0;
          if (i == n) break;
        }
      }
    }
  }
  return {disagreements == 0 && bad_solutions == 0,
          fmt("%d graphs, %ld targets, %d disagreements, %d bad solutions", graphs, instances, disagreements,
              bad_solutions)};
}

Outcome smith() {
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<long> entry(-9, 9);
  int bad = 0, minor_checked = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    const auto s = smith_normal_form(m);
    bool ok = s.U * m * s.V == s.B && s.B.is_diagonal();
    ok = ok && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
    const std::size_t d = std::min(r, c);
    bool zero_seen = false;
    for (std::size_t i = 0; i < d; ++i) {
      const Integer& x = s.B(i, i);
      ok = ok && x >= 0 && !(zero_seen && x != 0);
      zero_seen = zero_seen || x == 0;
      if (i + 1 < d && s.B(i + 1, i + 1) != 0) ok = ok && x != 0 && s.B(i + 1, i + 1) % x == 0;
    }
    if (r <= 4 && c <= 4) {
      const auto f = oracle::invariant_factors(m);
      for (std::size_t i = 0; i < d; ++i) ok = ok && s.B(i, i) == abs(f[i]);
      ++minor_checked;
    }
    bad += !ok;
  }
  return {bad == 0, fmt("500 matrices (%d against minor gcds), %d failures", minor_checked, bad)};
}

Outcome reductions() {
  std::mt19937_64 rng(1008);
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng() % 6, n = 1 + rng() % 6;
    const BitMatrix a = oracle::random_matrix(m, n, rng);
    const BitVector y = t % 2 ? oracle::mul(a, oracle::random_vector(n, rng)) : oracle::random_vector(m, rng);
    const auto [pa, py] = pad_balanced(a, y);
    bad += oracle::min_weight(pa, oracle::to_u64(py)) != oracle::min_weight(a, oracle::to_u64(y));
    const BitMatrix sq = oracle::random_matrix(n, n, rng);
    const BitVector sy = t % 3 ? oracle::mul(sq, oracle::random_vector(n, rng)) : oracle::random_vector(n, rng);
    const auto [sa, ssy] = symmetrize(sq, sy);
    bad += !sa.is_symmetric();
    bad += oracle::min_weight(sa, oracle::to_u64(ssy)) != oracle::min_weight(sq, oracle::to_u64(sy));
  }
  return {bad == 0, fmt("200 instances, %d disagreements", bad)};
}

Outcome circuit() {
  std::mt19937_64 rng(1009);
  int diverged = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = oracle::random_graph(n, rng);
    const auto spec = compile(g, Variant::classic());
    const Netlist nl = build_netlist(g);
    BitVector x = oracle::random_vector(n, rng);
    CircuitState cs = initial_circuit_state(nl, x);
    bool ok = nl.total_fan_in() == n + 2 * g.edge_count();
    for (int step = 0; step < 50; ++step) {
      const std::size_t v = rng() % n;
      x = press(spec, x, v);
      cs = simulate_press(nl, cs, v);
      ok = ok && cs.q == x;
    }
    diverged += !ok;
  }
  return {diverged == 0, fmt("100 graphs x 50 presses, %d divergent", diverged)};
}

Outcome variant_subsets() {
  std::mt19937_64 rng(1010);
  int violations = 0, library_mismatch = 0;
  auto check = [&](const Graph& g, const Variant& v) {
    const auto classic_img = oracle::image(oracle::closed(g));
    const auto spec = compile(g, v);
    const auto classic_spec = compile(g, Variant::classic());
    const std::size_t n = g.order();
    for (auto b : oracle::image(spec.rule())) {
      violations += classic_img.count(b) == 0;
      // the library's verdicts on the pair (0, b) must agree
      const BitVector bv = oracle::from_u64(b, n), z(n);
      library_mismatch += !equivalent(spec, z, bv) || !equivalent(classic_spec, z, bv);
    }
  };
  for (int t = 0; t < 100; ++t) check(oracle::random_parity_graph(1 + rng() % 12, false, rng), Variant::second_neighbors());
  for (int t = 0; t < 100; ++t) check(oracle::random_parity_graph(2 + 2 * (rng() % 6), true, rng), Variant::neighborhood());
  return {violations == 0 && library_mismatch == 0,
          fmt("100 even + 100 odd graphs, %d subset violations, %d verdict mismatches", violations, library_mismatch)};
}

}  // namespace

int main() {
  report("fredholm", fredholm);
  report("separating-invariant", separating);
  report("inversion", inversion);
  report("complete-rank", complete_rank);
  report("grid-5x5", grid_constants);
  report("colored-oracle", colored_oracle);
  report("smith", smith);
  report("reductions", reductions);
  report("circuit", circuit);
  report("variant-subsets", variant_subsets);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
