#include "lightsout/bitvec.hpp"

#include <algorithm>
#include <stdexcept>

namespace lightsout {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}

}  // namespace

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) set(i++, b != 0);
}

BitVector BitVector::ones(std::size_t len) {
  BitVector v(len);
  for (auto& w : v.words_) w = ~Word{0};
  if (len % kWordBits != 0 && !v.words_.empty())
    v.words_.back() = (Word{1} << (len % kWordBits)) - 1;
  return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
  if (index >= len) throw std::invalid_argument("unit vector index out of range");
  BitVector v(len);
  v.set(index);
  return v;
}

BitVector BitVector::from_string(std::string_view s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i);
    else if (s[i] != '0')
      throw std::invalid_argument("bitstring may only contain '0' and '1'");
  }
  return v;
}

std::size_t BitVector::popcount() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(len_, other.len_, "xor");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::numeric_less(const BitVector& other) const noexcept {
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != other.words_[i]) return words_[i] < other.words_[i];
  }
  return false;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(len_ + tail.len_);
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) out.set(i);
  for (std::size_t i = 0; i < tail.len_; ++i)
    if (tail.get(i)) out.set(len_ + i);
  return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t len) const {
  if (begin + len > len_) throw std::invalid_argument("slice out of range");
  BitVector out(len);
  for (std::size_t i = 0; i < len; ++i)
    if (get(begin + i)) out.set(i);
  return out;
}

bool dot(const BitVector& x, const BitVector& y) {
  require_same_length(x.size(), y.size(), "dot");
  Word acc = 0;
  auto xw = x.words();
  auto yw = y.words();
  for (std::size_t i = 0; i < xw.size(); ++i) acc ^= xw[i] & yw[i];
  return std::popcount(acc) & 1;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  std::vector<BitVector> vs;
  for (auto s : rows) vs.push_back(BitVector::from_string(s));
  const std::size_t cols = vs.empty() ? 0 : vs.front().size();
  return from_rows(vs, cols);
}

BitMatrix BitMatrix::diagonal(const BitVector& d) {
  BitMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.get(i)) m.set(i, i);
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
  return v;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  require_same_length(v.size(), cols_, "set_row");
  std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BitMatrix::xor_row_into(std::size_t dst, std::size_t src) noexcept {
  Word* d = data_.data() + dst * stride_;
  const Word* s = data_.data() + src * stride_;
  for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool BitMatrix::row_any(std::size_t r) const noexcept {
  auto w = row_words(r);
  return std::any_of(w.begin(), w.end(), [](Word x) { return x != 0; });
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

BitVector BitMatrix::operator*(const BitVector& x) const {
  require_same_length(x.size(), cols_, "matrix-vector product");
  BitVector y(rows_);
  auto xw = x.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    const Word* row = data_.data() + r * stride_;
    Word acc = 0;
    for (std::size_t w = 0; w < stride_; ++w) acc ^= row[w] & xw[w];
    if (std::popcount(acc) & 1) y.set(r);
  }
  return y;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  require_same_length(cols_, other.rows_, "matrix product");
  BitMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Word* dst = out.data_.data() + r * out.stride_;
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const Word* src = other.data_.data() + k * other.stride_;
      for (std::size_t w = 0; w < out.stride_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
  return *this;
}

bool BitMatrix::is_symmetric() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (get(r, c) != get(c, r)) return false;
  return true;
}

BitVector BitMatrix::diagonal_vector() const {
  BitVector d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i)
    if (get(i, i)) d.set(i);
  return d;
}

bool BitMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r).to_string());
  return out;
}

}  // namespace lightsout
