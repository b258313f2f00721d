#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lightsout {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed vector over GF(2). Bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}
  BitVector(std::initializer_list<int> bits);

  static BitVector ones(std::size_t len);
  static BitVector unit(std::size_t len, std::size_t index);
  /// Parses "01011"; leftmost character is coordinate 0.
  static BitVector from_string(std::string_view s);

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool v = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (v)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  bool operator[](std::size_t i) const noexcept { return get(i); }

  std::size_t popcount() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }

  /// Throws std::invalid_argument on length mismatch.
  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Order used for tie-breaks: the vector read as an integer with
  /// coordinate 0 as the least significant bit.
  bool numeric_less(const BitVector& other) const noexcept;

  std::string to_string() const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  /// Concatenation (this | tail).
  BitVector concat(const BitVector& tail) const;
  BitVector slice(std::size_t begin, std::size_t len) const;

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

/// Parity of the coordinatewise AND. Throws on length mismatch.
bool dot(const BitVector& x, const BitVector& y);

/// Row-major packed matrix over GF(2); rows are stored contiguously with a
/// fixed word stride.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);
  static BitMatrix from_rows(std::initializer_list<std::string_view> rows);
  static BitMatrix diagonal(const BitVector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = v ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) noexcept {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<const Word> row_words(std::size_t r) const noexcept {
    return {data_.data() + r * stride_, stride_};
  }
  std::span<Word> row_words(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }

  BitVector row(std::size_t r) const;
  BitVector column(std::size_t c) const;
  void set_row(std::size_t r, const BitVector& v);
  void xor_row_into(std::size_t dst, std::size_t src) noexcept;
  void swap_rows(std::size_t a, std::size_t b) noexcept;
  bool row_any(std::size_t r) const noexcept;

  BitMatrix transpose() const;
  /// Matrix-vector product; throws on dimension mismatch.
  BitVector operator*(const BitVector& x) const;
  BitMatrix operator*(const BitMatrix& other) const;
  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  bool is_symmetric() const noexcept;
  BitVector diagonal_vector() const;
  bool is_zero() const noexcept;

  std::vector<std::string> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace lightsout
