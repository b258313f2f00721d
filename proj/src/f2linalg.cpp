#include "lightsout/f2linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lightsout {

namespace {

// Rows x words below this stay on one thread; fork/join costs more than the XORs.
constexpr std::size_t kParallelWords = std::size_t{1} << 14;

// [M | I] with each half word-aligned so the halves can be copied out by word.
class Augmented {
 public:
  explicit Augmented(const BitMatrix& m)
      : rows_(m.rows()),
        cols_(m.cols()),
        left_words_(words_for(m.cols())),
        right_words_(words_for(m.rows())),
        stride_(left_words_ + right_words_),
        data_(rows_ * stride_, 0) {
    for (std::size_t r = 0; r < rows_; ++r) {
      auto src = m.row_words(r);
      std::copy(src.begin(), src.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
      at(r, left_words_ + r / kWordBits) |= Word{1} << (r % kWordBits);
    }
  }

  bool bit(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }

  void swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
  }

  // Clears column `col` in every row but `pivot` by XORing the pivot row in.
  // Words left of col/64 are zero in the pivot row and are skipped.
  void eliminate(std::size_t pivot, std::size_t col, bool parallel) noexcept {
    const std::size_t first = col / kWordBits;
    const Word mask = Word{1} << (col % kWordBits);
    const Word* src = data_.data() + pivot * stride_;
    Word* base = data_.data();
    const std::size_t stride = stride_;
    const auto rows = static_cast<std::ptrdiff_t>(rows_);
    const auto ipivot = static_cast<std::ptrdiff_t>(pivot);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
      if (i == ipivot) continue;
      Word* dst = base + static_cast<std::size_t>(i) * stride;
      if (!(dst[first] & mask)) continue;
      for (std::size_t w = first; w < stride; ++w) dst[w] ^= src[w];
    }
  }

  EchelonForm finish(std::size_t rank, std::vector<std::size_t> pivots) const {
    EchelonForm ef{BitMatrix(rows_, cols_), rank, std::move(pivots), BitMatrix(rows_, rows_)};
    for (std::size_t r = 0; r < rows_; ++r) {
      auto row = data_.begin() + static_cast<std::ptrdiff_t>(r * stride_);
      std::copy_n(row, left_words_, ef.reduced.row_words(r).begin());
      std::copy_n(row + static_cast<std::ptrdiff_t>(left_words_), right_words_,
                  ef.transform.row_words(r).begin());
    }
    return ef;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t work() const noexcept { return rows_ * stride_; }

 private:
  Word& at(std::size_t r, std::size_t w) noexcept { return data_[r * stride_ + w]; }

  std::size_t rows_, cols_, left_words_, right_words_, stride_;
  std::vector<Word> data_;
};

EchelonForm reduce_impl(const BitMatrix& m, bool allow_parallel) {
  Augmented a(m);
  const bool parallel = allow_parallel && a.work() >= kParallelWords;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && !a.bit(p, c)) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    a.eliminate(r, c, parallel);
    pivots.push_back(c);
    ++r;
  }
  return a.finish(r, std::move(pivots));
}

void require_rows(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("right-hand side has length " + std::to_string(b.size()) +
                                ", matrix has " + std::to_string(m.rows()) + " rows");
}

}  // namespace

EchelonForm row_reduce(const BitMatrix& m) { return reduce_impl(m, true); }

namespace serial {
EchelonForm row_reduce(const BitMatrix& m) { return reduce_impl(m, false); }
}  // namespace serial

std::optional<BitVector> solve(const EchelonForm& ef, const BitVector& b) {
  require_rows(ef.reduced, b);
  const BitVector tb = ef.transform * b;
  for (std::size_t r = ef.rank; r < tb.size(); ++r)
    if (tb.get(r)) return std::nullopt;
  BitVector x(ef.reduced.cols());
  for (std::size_t r = 0; r < ef.rank; ++r)
    if (tb.get(r)) x.set(ef.pivot_cols[r]);
  return x;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  require_rows(m, b);
  return solve(row_reduce(m), b);
}

std::vector<BitVector> kernel_basis(const EchelonForm& ef) {
  const std::size_t cols = ef.reduced.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ef.pivot_cols) is_pivot[c] = true;
  std::vector<BitVector> basis;
  basis.reserve(cols - ef.rank);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector v = BitVector::unit(cols, f);
    for (std::size_t r = 0; r < ef.rank; ++r)
      if (ef.reduced.get(r, f)) v.set(ef.pivot_cols[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) { return kernel_basis(row_reduce(m)); }

bool image_contains(const EchelonForm& ef, const BitVector& b) {
  require_rows(ef.reduced, b);
  const BitVector tb = ef.transform * b;
  for (std::size_t r = ef.rank; r < tb.size(); ++r)
    if (tb.get(r)) return false;
  return true;
}

bool image_contains(const BitMatrix& m, const BitVector& b) {
  require_rows(m, b);
  return image_contains(row_reduce(m), b);
}

std::size_t rank(const BitMatrix& m) { return row_reduce(m).rank; }

BitMatrix forward_echelon(const BitMatrix& m) {
  BitMatrix w = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t p = r;
    while (p < w.rows() && !w.get(p, c)) ++p;
    if (p == w.rows()) continue;
    w.swap_rows(r, p);
    for (std::size_t i = r + 1; i < w.rows(); ++i)
      if (w.get(i, c)) w.xor_row_into(i, r);
    ++r;
  }
  BitMatrix out(r, w.cols());
  for (std::size_t i = 0; i < r; ++i) out.set_row(i, w.row(i));
  return out;
}

}  // namespace lightsout
