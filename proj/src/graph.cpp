#include "lightsout/graph.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <stdexcept>

namespace lightsout {

Graph::Graph(std::size_t n, std::vector<Edge> edges, bool directed)
    : n_(n), directed_(directed), edges_(std::move(edges)), adj_(n) {
  for (auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} with n = " + std::to_string(n_));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (!directed_ && u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    if (!directed_) adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_)
    throw std::invalid_argument("label count does not match vertex count");
  labels_ = std::move(labels);
}

std::string_view to_string(DegreeParity p) {
  switch (p) {
    case DegreeParity::AllEvenOrZero: return "all-even-or-zero";
    case DegreeParity::AllOdd: return "all-odd";
    case DegreeParity::Mixed: return "mixed";
  }
  return "mixed";
}

BitMatrix adjacency_matrix(const Graph& g) {
  BitMatrix a(g.order(), g.order());
  for (auto [u, v] : g.edges()) {
    a.set(u, v);
    if (!g.directed()) a.set(v, u);
  }
  return a;
}

DegreeParity degree_parity(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("degree parity is defined for undirected graphs");
  bool even = false, odd = false;
  for (std::size_t v = 0; v < g.order(); ++v) (g.degree(v) % 2 ? odd : even) = true;
  if (odd && even) return DegreeParity::Mixed;
  return odd ? DegreeParity::AllOdd : DegreeParity::AllEvenOrZero;
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t v = i * cols + j;
      if (j + 1 < cols) e.emplace_back(v, v + 1);
      if (i + 1 < rows) e.emplace_back(v, v + cols);
    }
  return Graph(rows * cols, std::move(e));
}

Graph torus_graph(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("torus dimensions must be positive");
  std::set<Edge> e;
  auto add = [&](std::size_t u, std::size_t v) {
    if (u != v) e.insert(std::minmax(u, v));
  };
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t v = i * cols + j;
      add(v, i * cols + (j + 1) % cols);
      add(v, ((i + 1) % rows) * cols + j);
    }
  return Graph(rows * cols, {e.begin(), e.end()});
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

namespace {

std::size_t parse_size(std::string_view s, std::string_view spec) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad size '" + std::string(s) + "' in graph spec '" +
                                std::string(spec) + "'");
  return v;
}

std::pair<std::size_t, std::size_t> parse_dims(std::string_view s, std::string_view spec) {
  const auto x = s.find('x');
  if (x == std::string_view::npos)
    throw std::invalid_argument("expected RxC in graph spec '" + std::string(spec) + "'");
  return {parse_size(s.substr(0, x), spec), parse_size(s.substr(x + 1), spec)};
}

}  // namespace

Graph generate(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("graph spec must look like kind:params, got '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  if (kind == "path") return path_graph(parse_size(arg, spec));
  if (kind == "cycle") return cycle_graph(parse_size(arg, spec));
  if (kind == "complete") return complete_graph(parse_size(arg, spec));
  if (kind == "grid") {
    auto [r, c] = parse_dims(arg, spec);
    return grid_graph(r, c);
  }
  if (kind == "torus") {
    auto [r, c] = parse_dims(arg, spec);
    return torus_graph(r, c);
  }
  throw std::invalid_argument("unknown graph kind '" + std::string(kind) + "'");
}

std::size_t validate_group(const GroupTable& table) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    for (auto x : row)
      if (x >= n) throw std::invalid_argument("group table entry out of range");
  }
  // Latin square: every row and column is a permutation.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (row_seen[table[i][j]] || col_seen[table[j][i]])
        throw std::invalid_argument("group table rows/columns are not permutations");
      row_seen[table[i][j]] = col_seen[table[j][i]] = true;
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw std::invalid_argument("group table has no identity");

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return table[table[a][b]][c] == table[a][table[b][c]];
  };
  if (n <= kFullAssociativityCheck) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw std::invalid_argument("group table is not associative");
  } else {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 1 << 16; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw std::invalid_argument("group table is not associative");
  }
  return *identity;
}

Graph cayley(const GroupTable& table, std::span<const std::size_t> generators) {
  const std::size_t e = validate_group(table);
  const std::size_t n = table.size();
  std::vector<bool> in_s(n, false);
  for (auto s : generators) {
    if (s >= n) throw std::invalid_argument("generator out of range");
    if (s == e) throw std::invalid_argument("generator set contains the identity");
    in_s[s] = true;
  }
  for (auto s : generators) {
    std::size_t inv = 0;
    while (table[s][inv] != e) ++inv;
    if (!in_s[inv]) throw std::invalid_argument("generator set is not closed under inverses");
  }
  std::set<Edge> edges;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t s = 0; s < n; ++s)
      if (in_s[s]) edges.insert(std::minmax(g, table[g][s]));
  return Graph(n, {edges.begin(), edges.end()});
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (auto v : map_) {
    if (v >= map_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return Permutation(std::move(m));
}

BitMatrix Permutation::matrix() const {
  BitMatrix p(map_.size(), map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) p.set(i, map_[i]);
  return p;
}

BitVector Permutation::apply(const BitVector& x) const {
  if (x.size() != map_.size()) throw std::invalid_argument("permutation/vector size mismatch");
  BitVector y(x.size());
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (x.get(i)) y.set(map_[i]);
  return y;
}

Permutation left_translation(const GroupTable& table, std::size_t h) {
  if (h >= table.size()) throw std::invalid_argument("group element out of range");
  std::vector<std::size_t> m(table.size());
  for (std::size_t g = 0; g < table.size(); ++g) m[g] = table[h][g];
  return Permutation(std::move(m));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw std::invalid_argument("permutation size does not match graph order");
  for (auto [u, v] : g.edges())
    if (!g.has_edge(p[u], p[v])) return false;
  // A bijection that maps every edge to an edge maps E onto E (finite, same size).
  return true;
}

}  // namespace lightsout
