#include "selmer/gf2.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "selmer/errors.hpp"

namespace selmer {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

std::string shape(const F2Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const F2Matrix& a, const F2Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

// Forward elimination in place; returns the rank.
std::size_t eliminate(F2Matrix& m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t word = c / 64;
    std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = r;
    while (pivot < m.rows() && !(m.row(pivot)[word] & mask)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m.row(i)[word] & mask) m.add_row(i, r);
    }
    ++r;
  }
  return r;
}

}  // namespace

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * words_for(cols), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::ones(std::size_t rows, std::size_t cols) {
  F2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, true);
  return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) return {};
  F2Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ShapeError("from_rows: ragged row " + std::to_string(i));
    for (std::size_t j = 0; j < m.cols_; ++j) {
      char ch = rows[i][j];
      if (ch != '0' && ch != '1') throw ShapeError("from_rows: invalid character in row " + std::to_string(i));
      m.set(i, j, ch == '1');
    }
  }
  return m;
}

F2Matrix F2Matrix::from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  if (rows.size() == 0) return {};
  F2Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw ShapeError("from_ints: ragged row " + std::to_string(i));
    std::size_t j = 0;
    for (int v : r) m.set(i, j++, (v % 2) != 0);
    ++i;
  }
  return m;
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(bits_.begin() + a * stride_, bits_.begin() + (a + 1) * stride_,
                   bits_.begin() + b * stride_);
}

void F2Matrix::add_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = bits_.data() + dst * stride_;
  const std::uint64_t* s = bits_.data() + src * stride_;
  for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

F2Matrix F2Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block: window exceeds " + shape(*this));
  F2Matrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.set(i, j, get(r0 + i, c0 + j));
  return out;
}

void F2Matrix::place(std::size_t r0, std::size_t c0, const F2Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw ShapeError("place: " + shape(b) + " block does not fit in " + shape(*this));
  }
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) set(r0 + i, c0 + j, b.get(i, j));
}

bool F2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t F2Matrix::count_ones() const {
  std::size_t n = 0;
  for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::string> F2Matrix::row_strings() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) out[i][j] = '1';
  return out;
}

std::string F2Matrix::to_string() const {
  std::string s;
  for (const auto& r : row_strings()) {
    s += r;
    s += '\n';
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const F2Matrix& m) { return os << m.to_string(); }

std::size_t rank(const F2Matrix& m) {
  F2Matrix work = m;
  return eliminate(work);
}

int det(const F2Matrix& m) {
  if (!m.square()) throw ShapeError("det: matrix is " + shape(m) + ", not square");
  return rank(m) == m.rows() ? 1 : 0;
}

F2Matrix add(const F2Matrix& a, const F2Matrix& b) {
  require_same_shape(a, b, "add");
  F2Matrix out = a;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    auto dst = out.row(i);
    auto src = b.row(i);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
  }
  return out;
}

F2Matrix mul(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mul: inner dimensions differ, " + shape(a) + " * " + shape(b));
  }
  F2Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    auto arow = a.row(i);
    for (std::size_t w = 0; w < arow.size(); ++w) {
      std::uint64_t bits = arow[w];
      while (bits) {
        std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        auto src = b.row(k);
        for (std::size_t x = 0; x < dst.size(); ++x) dst[x] ^= src[x];
      }
    }
  }
  return out;
}

F2Matrix transpose(const F2Matrix& a) {
  F2Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) out.set(j, i, true);
  return out;
}

F2Matrix scale(long long k, const F2Matrix& m) {
  return (k % 2 != 0) ? m : F2Matrix(m.rows(), m.cols());
}

F2Matrix inverse(const F2Matrix& m) {
  if (!m.square()) throw ShapeError("inverse: matrix is " + shape(m) + ", not square");
  const std::size_t n = m.rows();
  F2Matrix aug(n, 2 * n);
  aug.place(0, 0, m);
  aug.place(0, n, F2Matrix::identity(n));
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = r;
    while (pivot < n && !aug.get(pivot, c)) ++pivot;
    if (pivot == n) continue;
    aug.swap_rows(r, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != r && aug.get(i, c)) aug.add_row(i, r);
    }
    ++r;
  }
  if (r < n) throw SingularMatrix(n, r);
  return aug.block(0, n, n, n);
}

void BlockLayout::validate() const {
  if (grid.empty()) return;
  const std::size_t ncols = grid.front().size();
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    if (grid[bi].size() != ncols) {
      throw ShapeError("block layout: block row " + std::to_string(bi) + " has " +
                       std::to_string(grid[bi].size()) + " blocks, expected " +
                       std::to_string(ncols));
    }
    for (std::size_t bj = 0; bj < ncols; ++bj) {
      if (grid[bi][bj].rows() != grid[bi][0].rows()) {
        throw ShapeError("block layout: height mismatch in block row " + std::to_string(bi));
      }
      if (grid[bi][bj].cols() != grid[0][bj].cols()) {
        throw ShapeError("block layout: width mismatch in block column " + std::to_string(bj));
      }
    }
  }
}

F2Matrix block_compose(const BlockLayout& layout) {
  layout.validate();
  if (layout.grid.empty()) return {};
  std::size_t total_rows = 0;
  std::size_t total_cols = 0;
  for (const auto& brow : layout.grid) total_rows += brow.front().rows();
  for (const auto& b : layout.grid.front()) total_cols += b.cols();
  F2Matrix out(total_rows, total_cols);
  std::size_t r0 = 0;
  for (const auto& brow : layout.grid) {
    std::size_t c0 = 0;
    for (const auto& b : brow) {
      out.place(r0, c0, b);
      c0 += b.cols();
    }
    r0 += brow.front().rows();
  }
  return out;
}

int schur_det(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c, const F2Matrix& d) {
  if (!a.square() || !d.square()) throw ShapeError("schur_det: diagonal blocks must be square");
  if (b.rows() != a.rows() || b.cols() != d.cols() || c.rows() != d.rows() ||
      c.cols() != a.cols()) {
    throw ShapeError("schur_det: off-diagonal blocks " + shape(b) + ", " + shape(c) +
                     " do not fit diagonal blocks " + shape(a) + ", " + shape(d));
  }
  // Subtraction is addition in characteristic 2.
  if (det(a) == 1) return det(d + c * inverse(a) * b);
  if (det(d) == 1) return det(a + b * inverse(d) * c);
  throw NotApplicable("schur_det: neither diagonal block is invertible");
}

}  // namespace selmer
