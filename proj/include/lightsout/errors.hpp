#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lightsout {

// Graph does not meet a variant's degree-parity gate.
class UnsupportedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Directed graph with an undirected variant, or the reverse.
class DirectednessMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedVariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t kernel_dim, unsigned long long budget)
      : std::runtime_error("coset of dimension " + std::to_string(kernel_dim) +
                           " exceeds budget of " + std::to_string(budget) + " points"),
        kernel_dim_(kernel_dim) {}

  std::size_t kernel_dim() const noexcept { return kernel_dim_; }

 private:
  std::size_t kernel_dim_;
};

// Raised when a result that a theorem guarantees is not produced.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lightsout
