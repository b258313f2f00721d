#pragma once

#include <optional>
#include <vector>

#include "lightsout/bitvec.hpp"

namespace lightsout {

/// Reduced row-echelon form with the row transform that produced it:
/// transform * original == reduced.
struct EchelonForm {
  BitMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // ascending, one per pivot row
  BitMatrix transform;
};

/// Gauss-Jordan elimination. Pivot is the leftmost column with a 1 at or
/// below the current row; the topmost such row is used. Row elimination
/// runs on OpenMP threads for large matrices.
EchelonForm row_reduce(const BitMatrix& m);

/// Canonical solution of m*x = b (free coordinates zero), or nullopt when b
/// is not in the column space.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);
std::optional<BitVector> solve(const EchelonForm& ef, const BitVector& b);

/// Basis of ker(m), one vector per free column, ordered by that column.
std::vector<BitVector> kernel_basis(const BitMatrix& m);
std::vector<BitVector> kernel_basis(const EchelonForm& ef);

bool image_contains(const BitMatrix& m, const BitVector& b);
bool image_contains(const EchelonForm& ef, const BitVector& b);

std::size_t rank(const BitMatrix& m);

/// Forward elimination only (no back substitution); same pivot rule as
/// row_reduce. Zero rows are dropped.
BitMatrix forward_echelon(const BitMatrix& m);

namespace serial {

/// Single-threaded reference for row_reduce; output is bit-identical.
EchelonForm row_reduce(const BitMatrix& m);

}  // namespace serial

}  // namespace lightsout
