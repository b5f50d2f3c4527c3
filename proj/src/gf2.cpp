#include "icode/gf2.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bits.hpp"

namespace icode {

namespace {

std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {
  if (length == 0) throw DimensionError("BitVector length must be at least 1");
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

BitVector BitVector::indicator(std::size_t length, std::span<const std::size_t> indices) {
  BitVector v(length);
  for (std::size_t i : indices) v.set(i);
  return v;
}

void BitVector::check_index(std::size_t index) const {
  if (index < 1 || index > length_)
    throw DimensionError("coordinate " + std::to_string(index) + " outside 1.." +
                         std::to_string(length_));
}

bool BitVector::get(std::size_t index) const {
  check_index(index);
  return bits::test(words_, index - 1);
}

void BitVector::set(std::size_t index, bool value) {
  check_index(index);
  if (value)
    bits::set(words_, index - 1);
  else
    bits::clear(words_, index - 1);
}

void BitVector::flip(std::size_t index) {
  check_index(index);
  bits::flip(words_, index - 1);
}

bool BitVector::none() const noexcept { return bits::none(words_); }

std::size_t BitVector::count() const noexcept { return bits::popcount(words_); }

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < length_; ++i)
    if (bits::test(words_, i)) out.push_back(i + 1);
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) throw DimensionError("xor of vectors " + dims(length_, other.length_));
  bits::xor_into(words_, other.words_);
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (bits::test(words_, i)) s[i] = '1';
  return s;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::ones(std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) m.set(i, j);
  return m;
}

BitMatrix BitMatrix::from_columns(std::size_t rows, std::span<const BitVector> columns) {
  BitMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw DimensionError("column " + std::to_string(j + 1) + " has length " +
                           std::to_string(columns[j].size()) + ", expected " +
                           std::to_string(rows));
    for (std::size_t i = 0; i < rows; ++i)
      if (bits::test(columns[j].words(), i)) m.set(i + 1, j + 1);
  }
  return m;
}

void BitMatrix::check_entry(std::size_t row, std::size_t col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_)
    throw DimensionError("entry (" + std::to_string(row) + "," + std::to_string(col) +
                         ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

bool BitMatrix::get(std::size_t row, std::size_t col) const {
  check_entry(row, col);
  return bits::test(row_words(row - 1), col - 1);
}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
  check_entry(row, col);
  std::span<Word> r(row_ptr(row - 1), stride_);
  if (value)
    bits::set(r, col - 1);
  else
    bits::clear(r, col - 1);
}

BitVector BitMatrix::row(std::size_t row) const {
  if (row < 1 || row > rows_) throw DimensionError("row " + std::to_string(row) + " out of range");
  BitVector v(cols_);
  std::ranges::copy(row_words(row - 1), v.words().begin());
  return v;
}

BitVector BitMatrix::column(std::size_t col) const {
  if (col < 1 || col > cols_) throw DimensionError("column " + std::to_string(col) + " out of range");
  BitVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    if (bits::test(row_words(i), col - 1)) bits::set(v.words(), i);
  return v;
}

std::vector<BitVector> BitMatrix::columns() const {
  std::vector<BitVector> out;
  out.reserve(cols_);
  for (std::size_t j = 1; j <= cols_; ++j) out.push_back(column(j));
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (bits::test(row_words(i), j)) t.set(j + 1, i + 1);
  return t;
}

BitMatrix BitMatrix::without_column(std::size_t col) const {
  if (col < 1 || col > cols_) throw DimensionError("column " + std::to_string(col) + " out of range");
  BitMatrix m(rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, out = 0; j < cols_; ++j) {
      if (j == col - 1) continue;
      if (bits::test(row_words(i), j)) m.set(i + 1, out + 1);
      ++out;
    }
  return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a < 1 || a > rows_ || b < 1 || b > rows_) throw DimensionError("row index out of range");
  std::swap_ranges(row_ptr(a - 1), row_ptr(a - 1) + stride_, row_ptr(b - 1));
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
  if (dst < 1 || dst > rows_ || src < 1 || src > rows_) throw DimensionError("row index out of range");
  bits::xor_into(std::span<Word>(row_ptr(dst - 1), stride_), row_words(src - 1));
}

bool BitMatrix::is_zero() const noexcept { return bits::none(data_); }

// ---------------------------------------------------------------------------
// Algorithms

std::size_t rank(const BitMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t stride = m.words_per_row();
  std::vector<Word> work(rows * stride);
  for (std::size_t i = 0; i < rows; ++i)
    std::ranges::copy(m.row_words(i), work.begin() + static_cast<std::ptrdiff_t>(i * stride));
  auto row = [&](std::size_t i) { return std::span<Word>(work.data() + i * stride, stride); };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && !bits::test(row(pivot), c)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) std::swap_ranges(row(pivot).begin(), row(pivot).end(), row(r).begin());
    for (std::size_t i = r + 1; i < rows; ++i)
      if (bits::test(row(i), c)) bits::xor_into(row(i), row(r));
    ++r;
  }
  return r;
}

std::optional<std::vector<std::size_t>> solve_membership(const BitVector& target,
                                                         std::span<const BitVector> basis) {
  const std::size_t n = target.size();
  const std::size_t w = words_for(n);
  const std::size_t cw = std::max<std::size_t>(1, words_for(basis.size()));

  // pivot_of[c] = slot in `vecs`/`combo` whose lowest coordinate is c.
  std::vector<std::size_t> pivot_of(n, bits::npos);
  std::vector<Word> vecs;
  std::vector<Word> combo;
  vecs.reserve(basis.size() * w);
  combo.reserve(basis.size() * cw);

  std::vector<Word> v(w);
  std::vector<Word> c(cw);
  auto reduce = [&](std::span<Word> vec, std::span<Word> comb) {
    for (std::size_t p = bits::lowest(vec); p != bits::npos; p = bits::lowest(vec)) {
      const std::size_t slot = pivot_of[p];
      if (slot == bits::npos) return p;
      bits::xor_into(vec, std::span<const Word>(vecs.data() + slot * w, w));
      bits::xor_into(comb, std::span<const Word>(combo.data() + slot * cw, cw));
    }
    return bits::npos;
  };

  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != n)
      throw DimensionError("basis vector " + std::to_string(j + 1) + " has length " +
                           std::to_string(basis[j].size()) + ", target has " + std::to_string(n));
    std::ranges::copy(basis[j].words(), v.begin());
    std::ranges::fill(c, 0);
    bits::set(c, j);
    const std::size_t p = reduce(v, c);
    if (p == bits::npos) continue;  // dependent on earlier vectors
    pivot_of[p] = vecs.size() / w;
    vecs.insert(vecs.end(), v.begin(), v.end());
    combo.insert(combo.end(), c.begin(), c.end());
  }

  std::ranges::copy(target.words(), v.begin());
  std::ranges::fill(c, 0);
  if (reduce(v, c) != bits::npos) return std::nullopt;

  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (bits::test(c, j)) out.push_back(j + 1);
  return out;
}

BitVector xor_sum(std::span<const BitVector> vs) {
  if (vs.empty()) throw DimensionError("xor_sum of an empty list has no length");
  BitVector acc = vs.front();
  for (std::size_t i = 1; i < vs.size(); ++i) acc ^= vs[i];
  return acc;
}

}  // namespace icode
