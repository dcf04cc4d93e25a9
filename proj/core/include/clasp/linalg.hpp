#pragma once

#include "clasp/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace clasp {

using SparseRow = std::map<std::size_t, Rational>;

/// Incrementally built row space over Q in reduced echelon form.
/// Rows are sparse; pivots are normalised to 1.
class RowSpace {
 public:
  /// Returns true if the row was independent of the current span.
  bool insert(SparseRow row);
  /// Remainder of `row` after elimination against the stored pivots.
  SparseRow reduce(SparseRow row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;  // pivot column -> row
};

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact inverse by Gauss-Jordan elimination. On a singular input throws
/// SingularMatrixError whose message names a nonzero kernel vector.
Matrix inverse(const Matrix& m);
std::vector<Rational> kernel_vector(const Matrix& m);
std::size_t rank(const Matrix& m);

}  // namespace clasp
