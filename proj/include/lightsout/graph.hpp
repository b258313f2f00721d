#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lightsout/bitvec.hpp"

namespace lightsout {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple graph on vertices 0..n-1. Undirected edges are stored with
/// first < second; edges are kept sorted. Construction rejects loops,
/// duplicates and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges, bool directed = false);

  std::size_t order() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Out-neighbors for directed graphs.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  bool has_edge(std::size_t u, std::size_t v) const;

  /// Optional vertex labels (e.g. group elements of a Cayley graph).
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::string> labels_;
};

enum class DegreeParity { AllEvenOrZero, AllOdd, Mixed };

std::string_view to_string(DegreeParity p);

/// Square matrix with A[j][k] = 1 iff edge j->k (both directions when undirected).
BitMatrix adjacency_matrix(const Graph& g);

/// Throws std::invalid_argument for directed graphs.
DegreeParity degree_parity(const Graph& g);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Vertex (i, j) has index i*cols + j; edges to 4-neighbors.
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph torus_graph(std::size_t rows, std::size_t cols);
Graph complete_graph(std::size_t n);

/// Parses generator strings: "path:5", "cycle:4", "grid:5x5", "torus:4x4", "complete:6".
Graph generate(std::string_view spec);

/// Row-major group table: table[g][h] = index of g*h.
using GroupTable = std::vector<std::vector<std::size_t>>;

/// Full associativity check up to this order; sampled above it.
inline constexpr std::size_t kFullAssociativityCheck = 64;

/// Validates `table` as a group and returns the identity index.
std::size_t validate_group(const GroupTable& table);

/// Cayley graph with edges {g, g*s}. S must be closed under inverses and
/// must not contain the identity.
Graph cayley(const GroupTable& table, std::span<const std::size_t> generators);

/// Vertex permutation: vertex i maps to map[i].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> map);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_.at(i); }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

  /// P with P[i][map[i]] = 1.
  BitMatrix matrix() const;
  /// y = P^T x, i.e. y[map[i]] = x[i].
  BitVector apply(const BitVector& x) const;

 private:
  std::vector<std::size_t> map_;
};

/// Left translation g -> h*g of a group table, as a vertex permutation.
Permutation left_translation(const GroupTable& table, std::size_t h);

bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace lightsout
