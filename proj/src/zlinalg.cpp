#include "lightsout/zlinalg.hpp"

#include <sstream>
#include <stdexcept>

namespace lightsout {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& x) const {
  if (cols_ != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  IntVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("ext_gcd(0, 0) is undefined");
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

bool is_prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("primality test is limited to p < 2^32");
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(const Integer& v, std::uint64_t p) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

std::optional<IntVector> solve_mod_p(const IntMatrix& m, const IntVector& c, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (c.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match row count");
  const std::size_t rows = m.rows(), cols = m.cols(), width = cols + 1;
  // p < 2^32, so products of residues fit in 64 bits.
  std::vector<std::uint64_t> a(rows * width);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i * width + j] = reduce(m(i, j), p);
    a[i * width + cols] = reduce(c[i], p);
  }
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * width + j]; };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < width; ++j) std::swap(at(r, j), at(piv, j));
    const std::uint64_t inv = pow_mod(at(r, col), p - 2, p);
    for (std::size_t j = col; j < width; ++j) at(r, j) = at(r, j) * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || at(i, col) == 0) continue;
      const std::uint64_t f = at(i, col);
      for (std::size_t j = col; j < width; ++j) at(i, j) = (at(i, j) + (p - f) * at(r, j)) % p;
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (at(i, cols) != 0) return std::nullopt;
  IntVector x(cols, Integer(0));
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = static_cast<unsigned long>(at(i, cols));
  return x;
}

namespace {

struct SmithWork {
  IntMatrix b, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    b.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    b.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    b.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    b.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithWork w{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& b = w.b;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero |entry| of the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (b(i, j) != 0 && (!best || abs(b(i, j)) < abs(b(best->first, best->second)))) best = {i, j};
    if (!best) break;
    w.swap_rows(t, best->first);
    w.swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (b(i, t) == 0) continue;
        w.add_row(i, t, -Integer(b(i, t) / b(t, t)));
        if (b(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (b(t, j) == 0) continue;
        w.add_col(j, t, -Integer(b(t, j) / b(t, t)));
        if (b(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Remainders are smaller than the pivot; move the smallest into place.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (b(i, t) != 0 && abs(b(i, t)) < abs(b(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (b(t, j) != 0 && abs(b(t, j)) < abs(b(bi, bj))) bi = t, bj = j;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (b(i, j) % b(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      w.add_row(t, *bad_row, Integer(1));
    }
    if (b(t, t) < 0) {
      b.negate_row(t);
      w.u.negate_row(t);
    }
  }
  return {std::move(w.u), std::move(w.b), std::move(w.v)};
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace lightsout
