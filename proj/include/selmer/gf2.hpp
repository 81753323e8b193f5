#pragma once

// Dense matrices over the two-element field with rows packed into 64-bit words.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace selmer {

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static F2Matrix identity(std::size_t n);
  static F2Matrix ones(std::size_t rows, std::size_t cols);
  /// Rows of '0'/'1' characters; throws ShapeError on ragged input or other characters.
  static F2Matrix from_rows(const std::vector<std::string>& rows);
  /// Integer entries reduced mod 2.
  static F2Matrix from_ints(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (j % 64);
    std::uint64_t& w = bits_[i * stride_ + j / 64];
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t i, std::size_t j) { bits_[i * stride_ + j / 64] ^= std::uint64_t{1} << (j % 64); }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * stride_, stride_};
  }
  std::span<std::uint64_t> row(std::size_t i) { return {bits_.data() + i * stride_, stride_}; }

  void swap_rows(std::size_t a, std::size_t b);
  /// row(dst) ^= row(src)
  void add_row(std::size_t dst, std::size_t src);

  /// Copy of the nr x nc window whose top-left corner is (r0, c0).
  F2Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Overwrites the window at (r0, c0) with `b`.
  void place(std::size_t r0, std::size_t c0, const F2Matrix& b);

  bool is_zero() const;
  std::size_t count_ones() const;

  std::vector<std::string> row_strings() const;
  /// One row of '0'/'1' per line, newline-terminated.
  std::string to_string() const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

std::ostream& operator<<(std::ostream& os, const F2Matrix& m);

std::size_t rank(const F2Matrix& m);
/// Square matrices only; the 0x0 determinant is 1.
int det(const F2Matrix& m);
F2Matrix add(const F2Matrix& a, const F2Matrix& b);
F2Matrix mul(const F2Matrix& a, const F2Matrix& b);
F2Matrix transpose(const F2Matrix& a);
/// Throws SingularMatrix carrying the attained rank.
F2Matrix inverse(const F2Matrix& m);
/// k * M with k reduced mod 2.
F2Matrix scale(long long k, const F2Matrix& m);

inline F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) { return add(a, b); }
inline F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) { return mul(a, b); }

// A rectangular grid of blocks; every block row shares a height and every
// block column shares a width.
struct BlockLayout {
  std::vector<std::vector<F2Matrix>> grid;

  /// Throws ShapeError when the partition is inconsistent.
  void validate() const;
};

F2Matrix block_compose(const BlockLayout& layout);

/// det([[A, B], [C, D]]) through a Schur complement on whichever diagonal
/// block is invertible (A first). Throws NotApplicable when neither is.
int schur_det(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c, const F2Matrix& d);

}  // namespace selmer
