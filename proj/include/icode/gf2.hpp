#pragma once

// Dense bit-packed vectors and matrices over GF(2).
//
// Every index in this interface is 1-based: coordinate 1 is the first bit of a
// vector, row 1 / column 1 the top-left entry of a matrix.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace icode {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Thrown when operands of a GF(2) operation disagree in shape.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BitVector {
 public:
  /// Zero vector with `length` coordinates; `length` must be at least 1.
  explicit BitVector(std::size_t length);

  static BitVector unit(std::size_t length, std::size_t index);
  static BitVector indicator(std::size_t length,
                             std::span<const std::size_t> indices);

  std::size_t size() const noexcept { return length_; }

  bool get(std::size_t index) const;
  void set(std::size_t index, bool value = true);
  void flip(std::size_t index);

  bool none() const noexcept;
  std::size_t count() const noexcept;

  /// Indices of the nonzero coordinates, ascending.
  std::vector<std::size_t> support() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  /// "0110..." with coordinate 1 first.
  std::string to_string() const;

 private:
  void check_index(std::size_t index) const;

  std::size_t length_;
  std::vector<Word> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix ones(std::size_t rows, std::size_t cols);
  /// Matrix whose j-th column is `columns[j-1]`; all columns must have length `rows`.
  static BitMatrix from_columns(std::size_t rows,
                                std::span<const BitVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value = true);

  BitVector row(std::size_t row) const;
  BitVector column(std::size_t col) const;
  std::vector<BitVector> columns() const;

  BitMatrix transpose() const;
  BitMatrix without_column(std::size_t col) const;

  void swap_rows(std::size_t a, std::size_t b);
  /// row[dst] ^= row[src]
  void add_row(std::size_t dst, std::size_t src);

  bool is_zero() const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  /// Packed storage of one row (0-based row index), `words_per_row()` words.
  std::span<const Word> row_words(std::size_t row0) const noexcept {
    return {data_.data() + row0 * stride_, stride_};
  }
  std::size_t words_per_row() const noexcept { return stride_; }

 private:
  void check_entry(std::size_t row, std::size_t col) const;
  Word* row_ptr(std::size_t row0) noexcept { return data_.data() + row0 * stride_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// GF(2) rank (row rank equals column rank).
std::size_t rank(const BitMatrix& m);

/// Finds a subset of `basis` whose XOR equals `target`. Positions in the
/// returned set are 1-based indices into `basis`, ascending. The elimination
/// order is fixed (basis vectors in order, lowest coordinate as pivot) so the
/// answer is reproducible. An empty basis is allowed.
std::optional<std::vector<std::size_t>> solve_membership(
    const BitVector& target, std::span<const BitVector> basis);

/// Coordinatewise XOR of a non-empty list of equal-length vectors.
BitVector xor_sum(std::span<const BitVector> vs);

}  // namespace icode
