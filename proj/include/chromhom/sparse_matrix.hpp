#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace chromhom {

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  std::int64_t value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Integer matrix in coordinate form. Entries are kept sorted row-major with
/// duplicates summed and zeros dropped, so equality is structural. Arithmetic
/// is overflow-checked and throws std::overflow_error.
///
/// A matrix of a map V -> W has dim W rows and dim V columns.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<MatrixEntry>& entries() const noexcept { return entries_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  std::int64_t at(std::size_t row, std::size_t col) const;
  std::vector<std::vector<std::int64_t>> to_dense() const;

  SparseMatrix scaled(std::int64_t factor) const;
  SparseMatrix transposed() const;

  /// Composition: (lhs * rhs) applies rhs first.
  friend SparseMatrix operator*(const SparseMatrix& lhs, const SparseMatrix& rhs);
  friend SparseMatrix operator+(const SparseMatrix& lhs, const SparseMatrix& rhs);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  void canonicalize();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace chromhom
