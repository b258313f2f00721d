#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lightsout {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& x) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  bool is_diagonal() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// s*a + t*b == g == gcd(a, b), g >= 0.
struct ExtGcd {
  Integer g, s, t;
};

/// Iterative extended Euclid. Throws std::invalid_argument when a == b == 0.
ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// Deterministic trial division; p must be below 2^32.
bool is_prime(std::uint64_t p);

/// Canonical x in [0, p)^n with M x = c (mod p), free coordinates zero.
/// Throws std::invalid_argument if p is not a prime below 2^32.
std::optional<IntVector> solve_mod_p(const IntMatrix& m, const IntVector& c, std::uint64_t p);

/// U * M * V == B with U, V unimodular and B diagonal, nonnegative, with
/// B[i][i] | B[i+1][i+1] and zeros last.
struct SmithDecomposition {
  IntMatrix U, B, V;
};

/// Pivot is the nonzero entry of least absolute value in the remaining
/// block (first in row-major order on ties).
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Fraction-free Gaussian elimination (Bareiss). Square input only.
Integer determinant(const IntMatrix& m);

}  // namespace lightsout
