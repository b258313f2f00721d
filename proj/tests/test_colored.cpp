#include <doctest.h>

#include <random>

#include "lightsout/colored.hpp"
#include "oracles.hpp"

using namespace lightsout;

namespace {

ColoredState st(std::uint32_t k, std::vector<std::uint32_t> v) { return make_colored_state(k, std::move(v)); }

bool satisfies(const Graph& g, const ColoredState& i, const ColoredState& f, const PressCounts& a) {
  return apply_presses(g, i, a) == f;
}

}  // namespace

TEST_CASE("press_colored examples") {
  CHECK(press_colored(path_graph(3), st(3, {0, 0, 0}), 1) == st(3, {1, 1, 1}));
  auto s = st(5, {1, 4, 2, 0});
  auto t = s;
  for (int i = 0; i < 5; ++i) t = press_colored(cycle_graph(4), t, 2);
  CHECK(t == s);
  CHECK(press_colored(complete_graph(3), st(4, {3, 3, 3}), 0) == st(4, {0, 0, 0}));
  CHECK_THROWS_AS(press_colored(path_graph(3), st(3, {0, 0, 0}), 3), std::invalid_argument);
  CHECK_THROWS_AS(st(3, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(st(1, {0}), std::invalid_argument);
}

TEST_CASE("squarefree solver examples") {
  auto a = solve_squarefree(path_graph(3), st(6, {0, 0, 0}), st(6, {1, 1, 1}));
  REQUIRE(a);
  CHECK(a->counts == std::vector<std::uint32_t>{0, 1, 0});
  CHECK_FALSE(solve_squarefree(complete_graph(3), st(3, {0, 0, 0}), st(3, {1, 0, 0})));
  auto z = solve_squarefree(cycle_graph(5), st(15, {3, 1, 4, 1, 5}), st(15, {3, 1, 4, 1, 5}));
  CHECK(z->counts == std::vector<std::uint32_t>(5, 0));
  CHECK_THROWS_AS(solve_squarefree(path_graph(3), st(4, {0, 0, 0}), st(4, {1, 1, 1})), std::invalid_argument);
}

TEST_CASE("general solver examples") {
  auto a = solve_general(path_graph(3), st(4, {0, 0, 0}), st(4, {1, 1, 1}));
  REQUIRE(a);
  CHECK(a->counts == std::vector<std::uint32_t>{0, 1, 0});
  auto b = solve_general(complete_graph(3), st(3, {0, 0, 0}), st(3, {1, 1, 1}));
  REQUIRE(b);
  CHECK((b->counts[0] + b->counts[1] + b->counts[2]) % 3 == 1);
  CHECK(satisfies(complete_graph(3), st(3, {0, 0, 0}), st(3, {1, 1, 1}), *b));
  CHECK_FALSE(solve_general(complete_graph(3), st(3, {0, 0, 0}), st(3, {1, 0, 0})));
}

TEST_CASE("solvable_colored examples") {
  CHECK(solvable_colored(complete_graph(3), st(3, {0, 0, 0}), st(3, {1, 1, 1})));
  CHECK_FALSE(solvable_colored(complete_graph(3), st(3, {0, 0, 0}), st(3, {1, 0, 0})));
  CHECK(solvable_colored(grid_graph(2, 3), st(9, {1, 2, 3, 4, 5, 6}), st(9, {1, 2, 3, 4, 5, 6})));
}

TEST_CASE("squarefree factoring") {
  CHECK(*squarefree_factors(30) == std::vector<std::uint32_t>{2, 3, 5});
  CHECK(*squarefree_factors(7) == std::vector<std::uint32_t>{7});
  CHECK_FALSE(squarefree_factors(12));
  CHECK_FALSE(squarefree_factors(49));
}

TEST_CASE("both solvers agree with exhaustive search") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const Graph g = oracle::random_graph(n, rng, 0.5);
    for (std::uint32_t k : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 10u}) {
      const auto img = oracle::colored_image(g, k);
      for (int q = 0; q < 5; ++q) {
        std::vector<std::uint32_t> iv(n), fv(n), c(n);
        for (std::size_t j = 0; j < n; ++j) {
          iv[j] = rng() % k;
          fv[j] = rng() % k;
          c[j] = (fv[j] + k - iv[j]) % k;
        }
        const auto i = st(k, iv), f = st(k, fv);
        const bool reach = img.count(oracle::encode(c, k));
        auto a = solve_general(g, i, f);
        CHECK(bool(a) == reach);
        if (a) CHECK(satisfies(g, i, f, *a));
        if (squarefree_factors(k)) {
          auto b = solve_squarefree(g, i, f);
          CHECK(bool(b) == reach);
          if (b) CHECK(satisfies(g, i, f, *b));
        }
      }
    }
  }
}

TEST_CASE("k = 2 matches the classic game") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = oracle::random_graph(n, rng);
    const auto img = oracle::image(oracle::closed(g));
    auto x = oracle::random_vector(n, rng);
    std::vector<std::uint32_t> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = x.get(j);
    CHECK(solvable_colored(g, st(2, std::vector<std::uint32_t>(n, 0)), st(2, v)) ==
          (img.count(oracle::to_u64(x)) == 1));
  }
}

TEST_CASE("press path reproduces i + N a") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const std::uint32_t k = 2 + rng() % 7;
    const Graph g = oracle::random_graph(n, rng);
    std::vector<std::uint32_t> iv(n), counts(n);
    for (auto& v : iv) v = rng() % k;
    for (auto& v : counts) v = rng() % k;
    ColoredState s = st(k, iv);
    for (std::size_t j = 0; j < n; ++j)
      for (std::uint32_t r = 0; r < counts[j]; ++r) s = press_colored(g, s, j);
    CHECK(s == apply_presses(g, st(k, iv), PressCounts{k, counts}));
  }
}
