#include "clasp/linalg.hpp"

#include "clasp/errors.hpp"

#include <string>
#include <utility>

namespace clasp {

SparseRow RowSpace::reduce(SparseRow row) const {
  // Eliminate pivot columns in increasing order; each subtraction only adds
  // entries to the right of the pivot (rows are kept fully reduced).
  auto it = row.begin();
  while (it != row.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const Rational factor = it->second;
    const std::size_t col = it->first;
    for (const auto& [j, v] : p->second) {
      auto [cell, inserted] = row.try_emplace(j, -factor * v);
      if (!inserted) {
        cell->second -= factor * v;
        if (cell->second.is_zero()) row.erase(cell);
      }
    }
    it = row.upper_bound(col);
  }
  return row;
}

bool RowSpace::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::size_t col = row.begin()->first;
  const Rational lead = row.begin()->second;
  for (auto& [j, v] : row) v /= lead;
  // Keep existing pivot rows reduced with respect to the new pivot.
  for (auto& [pc, prow] : pivots_) {
    auto hit = prow.find(col);
    if (hit == prow.end()) continue;
    const Rational factor = hit->second;
    for (const auto& [j, v] : row) {
      auto [cell, inserted] = prow.try_emplace(j, -factor * v);
      if (!inserted) {
        cell->second -= factor * v;
        if (cell->second.is_zero()) prow.erase(cell);
      }
    }
  }
  pivots_.emplace(col, std::move(row));
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix shapes do not match");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

struct Elimination {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

Elimination rref(Matrix a) {
  Elimination e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Rational lead = a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) /= lead;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.reduced = std::move(a);
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

std::vector<Rational> kernel_vector(const Matrix& m) {
  const Elimination e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    return v;
  }
  return {};
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Elimination e = rref(std::move(aug));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] >= n)) {
    std::string kv;
    for (const auto& x : kernel_vector(m)) kv += (kv.empty() ? "" : ", ") + to_string(x);
    throw SingularMatrixError("singular strut matrix; kernel vector (" + kv + ")");
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

}  // namespace clasp
