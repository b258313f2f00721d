#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "lightsout/bitvec.hpp"

namespace lightsout {

inline constexpr std::uint64_t kDefaultCosetBudget = std::uint64_t{1} << 24;

struct MinWeightResult {
  BitVector solution;
  std::size_t weight = 0;
  std::uint64_t coset_size = 0;  // 2^(n - rank)
};

/// Exact minimum-weight x with M x = c, ties broken by the smaller packed
/// value (BitVector::numeric_less). Returns nullopt when c is not in the
/// image; throws BudgetExceeded when the coset has more than `budget`
/// points. The coset is walked in Gray-code order, split across OpenMP
/// threads by fixing the high kernel coefficients.
std::optional<MinWeightResult> min_weight_solution(const BitMatrix& m, const BitVector& c,
                                                   std::uint64_t budget = kDefaultCosetBudget);

/// Minimum-weight nonzero x with A x = 0, or nullopt if the kernel is trivial.
std::optional<MinWeightResult> min_weight_kernel_vector(const BitMatrix& a,
                                                        std::uint64_t budget = kDefaultCosetBudget);

/// Squares a nearest-codeword instance: zero columns on the right when
/// cols < rows, zero rows (and zero entries of y) at the bottom when
/// cols > rows. Minimum solution weight is unchanged.
std::pair<BitMatrix, BitVector> pad_balanced(const BitMatrix& a, const BitVector& y);

/// [[0, A^T], [A, 0]] with right-hand side (0 | y). Minimum solution weight is unchanged.
std::pair<BitMatrix, BitVector> symmetrize(const BitMatrix& a, const BitVector& y);

namespace serial {

/// Single Gray-code walk over the whole coset; reference for the threaded version.
std::optional<MinWeightResult> min_weight_solution(const BitMatrix& m, const BitVector& c,
                                                   std::uint64_t budget = kDefaultCosetBudget);
std::optional<MinWeightResult> min_weight_kernel_vector(const BitMatrix& a,
                                                        std::uint64_t budget = kDefaultCosetBudget);

}  // namespace serial

}  // namespace lightsout
