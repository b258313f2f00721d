#include "lightsout/minweight.hpp"

#include <span>
#include <stdexcept>
#include <vector>

#include "lightsout/errors.hpp"
#include "lightsout/f2linalg.hpp"

namespace lightsout {

namespace {

// Kernel dimension below which the walk is not split into chunks.
constexpr std::size_t kParallelMinDim = 12;
// 2^kChunkBits chunks when splitting.
constexpr std::size_t kChunkBits = 6;

struct Best {
  BitVector x;
  std::size_t weight = 0;
  bool found = false;

  void offer(const BitVector& cand, std::size_t w) {
    if (!found || w < weight || (w == weight && cand.numeric_less(x))) {
      x = cand;
      weight = w;
      found = true;
    }
  }
  void offer(const Best& other) {
    if (other.found) offer(other.x, other.weight);
  }
};

// Walks start + span(basis) in Gray-code order.
Best gray_walk(BitVector x, std::span<const BitVector> basis, bool skip_zero) {
  Best best;
  if (!(skip_zero && x.none())) best.offer(x, x.popcount());
  const std::uint64_t steps = std::uint64_t{1} << basis.size();
  for (std::uint64_t t = 1; t < steps; ++t) {
    x ^= basis[static_cast<std::size_t>(std::countr_zero(t))];
    const std::size_t w = x.popcount();
    if (w > best.weight && best.found) continue;
    if (!(skip_zero && w == 0)) best.offer(x, w);
  }
  return best;
}

Best chunked_walk(const BitVector& start, const std::vector<BitVector>& basis, bool skip_zero) {
  const std::size_t dim = basis.size();
  const std::size_t high = dim >= kParallelMinDim ? kChunkBits : 0;
  const std::size_t low = dim - high;
  const std::span<const BitVector> low_basis(basis.data(), low);
  const auto chunks = static_cast<std::ptrdiff_t>(std::size_t{1} << high);
  std::vector<Best> results(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1) if (high > 0)
  for (std::ptrdiff_t idx = 0; idx < chunks; ++idx) {
    BitVector x = start;
    for (std::size_t b = 0; b < high; ++b)
      if ((static_cast<std::size_t>(idx) >> b) & 1u) x ^= basis[low + b];
    results[static_cast<std::size_t>(idx)] = gray_walk(std::move(x), low_basis, skip_zero);
  }
  Best best;
  for (const auto& r : results) best.offer(r);
  return best;
}

std::uint64_t checked_coset_size(std::size_t dim, std::uint64_t budget) {
  if (dim >= 64 || (std::uint64_t{1} << dim) > budget) throw BudgetExceeded(dim, budget);
  return std::uint64_t{1} << dim;
}

// Smallest j with column j equal to c, if any.
std::optional<std::size_t> matching_column(const BitMatrix& m, const BitVector& c) {
  const BitMatrix t = m.transpose();
  for (std::size_t j = 0; j < t.rows(); ++j)
    if (t.row(j) == c) return j;
  return std::nullopt;
}

std::optional<MinWeightResult> solution_impl(const BitMatrix& m, const BitVector& c, std::uint64_t budget,
                                             bool parallel) {
  if (c.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match row count");
  const EchelonForm ef = row_reduce(m);
  auto x0 = solve(ef, c);
  if (!x0) return std::nullopt;
  const auto basis = kernel_basis(ef);
  const std::uint64_t size = checked_coset_size(basis.size(), budget);
  if (c.none()) return MinWeightResult{BitVector(m.cols()), 0, size};
  if (auto j = matching_column(m, c)) return MinWeightResult{BitVector::unit(m.cols(), *j), 1, size};
  const Best best = parallel ? chunked_walk(*x0, basis, false) : gray_walk(*x0, basis, false);
  return MinWeightResult{best.x, best.weight, size};
}

std::optional<MinWeightResult> kernel_impl(const BitMatrix& a, std::uint64_t budget, bool parallel) {
  if (a.rows() != a.cols()) throw std::invalid_argument("adjacency matrix must be square");
  const auto basis = kernel_basis(a);
  if (basis.empty()) return std::nullopt;
  const std::uint64_t size = checked_coset_size(basis.size(), budget);
  if (auto j = matching_column(a, BitVector(a.rows()))) return MinWeightResult{BitVector::unit(a.cols(), *j), 1, size};
  const BitVector zero(a.cols());
  const Best best = parallel ? chunked_walk(zero, basis, true) : gray_walk(zero, basis, true);
  return MinWeightResult{best.x, best.weight, size};
}

}  // namespace

std::optional<MinWeightResult> min_weight_solution(const BitMatrix& m, const BitVector& c, std::uint64_t budget) {
  return solution_impl(m, c, budget, true);
}

std::optional<MinWeightResult> min_weight_kernel_vector(const BitMatrix& a, std::uint64_t budget) {
  return kernel_impl(a, budget, true);
}

namespace serial {

std::optional<MinWeightResult> min_weight_solution(const BitMatrix& m, const BitVector& c, std::uint64_t budget) {
  return solution_impl(m, c, budget, false);
}

std::optional<MinWeightResult> min_weight_kernel_vector(const BitMatrix& a, std::uint64_t budget) {
  return kernel_impl(a, budget, false);
}

}  // namespace serial

std::pair<BitMatrix, BitVector> pad_balanced(const BitMatrix& a, const BitVector& y) {
  if (y.size() != a.rows()) throw std::invalid_argument("right-hand side length does not match row count");
  const std::size_t n = std::max(a.rows(), a.cols());
  BitMatrix out(n, n);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r, c);
  return {std::move(out), y.concat(BitVector(n - a.rows()))};
}

std::pair<BitMatrix, BitVector> symmetrize(const BitMatrix& a, const BitVector& y) {
  if (a.rows() != a.cols()) throw std::invalid_argument("symmetrize needs a square matrix");
  if (y.size() != a.rows()) throw std::invalid_argument("right-hand side length does not match row count");
  const std::size_t n = a.rows();
  BitMatrix out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a.get(r, c)) {
        out.set(n + r, c);  // lower-left A
        out.set(c, n + r);  // upper-right A^T
      }
  return {std::move(out), BitVector(n).concat(y)};
}

}  // namespace lightsout
