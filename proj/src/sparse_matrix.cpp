#include "chromhom/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chromhom {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in matrix arithmetic");
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in matrix arithmetic");
  return out;
}

}  // namespace checked

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  for (const MatrixEntry& e : entries_)
    if (e.row >= rows_ || e.col >= cols_)
      throw std::out_of_range("matrix entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                              ") outside a " + std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  canonicalize();
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  m.entries_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.entries_.push_back({i, i, 1});
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<MatrixEntry> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) entries.push_back({r, c, rows[r][c]});
  }
  return SparseMatrix(rows.size(), cols, std::move(entries));
}

void SparseMatrix::canonicalize() {
  std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<MatrixEntry> merged;
  merged.reserve(entries_.size());
  for (const MatrixEntry& e : entries_) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
      merged.back().value = checked::add(merged.back().value, e.value);
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const MatrixEntry& e) { return e.value == 0; });
  entries_ = std::move(merged);
}

std::int64_t SparseMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), MatrixEntry{row, col, 0},
                             [](const MatrixEntry& a, const MatrixEntry& b) {
                               return a.row != b.row ? a.row < b.row : a.col < b.col;
                             });
  return it != entries_.end() && it->row == row && it->col == col ? it->value : 0;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_, 0));
  for (const MatrixEntry& e : entries_) out[e.row][e.col] = e.value;
  return out;
}

SparseMatrix SparseMatrix::scaled(std::int64_t factor) const {
  std::vector<MatrixEntry> entries = entries_;
  for (MatrixEntry& e : entries) e.value = checked::mul(e.value, factor);
  return SparseMatrix(rows_, cols_, std::move(entries));
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<MatrixEntry> entries;
  entries.reserve(entries_.size());
  for (const MatrixEntry& e : entries_) entries.push_back({e.col, e.row, e.value});
  return SparseMatrix(cols_, rows_, std::move(entries));
}

SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_)
    throw std::invalid_argument("cannot compose a " + std::to_string(lhs.rows_) + "x" + std::to_string(lhs.cols_) +
                                " matrix with a " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_) +
                                " matrix");
  // rhs rows are contiguous in the canonical order.
  std::vector<std::size_t> row_start(rhs.rows_ + 1, 0);
  for (const MatrixEntry& e : rhs.entries_) ++row_start[e.row + 1];
  for (std::size_t r = 0; r < rhs.rows_; ++r) row_start[r + 1] += row_start[r];

  std::vector<MatrixEntry> out;
  for (const MatrixEntry& a : lhs.entries_)
    for (std::size_t k = row_start[a.col]; k < row_start[a.col + 1]; ++k) {
      const MatrixEntry& b = rhs.entries_[k];
      out.push_back({a.row, b.col, checked::mul(a.value, b.value)});
    }
  return SparseMatrix(lhs.rows_, rhs.cols_, std::move(out));
}

SparseMatrix operator+(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw std::invalid_argument("matrix shapes differ");
  std::vector<MatrixEntry> out = lhs.entries_;
  out.insert(out.end(), rhs.entries_.begin(), rhs.entries_.end());
  return SparseMatrix(lhs.rows_, lhs.cols_, std::move(out));
}

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<MatrixEntry> out;
  out.reserve(a.nonzeros() * b.nonzeros());
  for (const MatrixEntry& x : a.entries())
    for (const MatrixEntry& y : b.entries())
      out.push_back({x.row * b.rows() + y.row, x.col * b.cols() + y.col, checked::mul(x.value, y.value)});
  return SparseMatrix(a.rows() * b.rows(), a.cols() * b.cols(), std::move(out));
}

}  // namespace chromhom
