#include "grassgb/gf2_linalg.hpp"

#include <utility>

#include "grassgb/errors.hpp"

namespace grassgb {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (bits_[r * words_per_row() + c / 64] >> (c % 64)) & 1U;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  std::uint64_t& word = bits_[r * words_per_row() + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  word = value ? (word | mask) : (word & ~mask);
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  bits_[r * words_per_row() + c / 64] ^= std::uint64_t{1} << (c % 64);
}

bool Gf2Matrix::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) return false;
  }
  return true;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(Gf2Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const bool tmp = m.get(row, c);
        m.set(row, c, m.get(pivot, c));
        m.set(pivot, c, tmp);
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || !m.get(r, col)) continue;
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m.get(row, c)) m.flip(r, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t Gf2Matrix::rank() const {
  Gf2Matrix copy = *this;
  return row_reduce(copy).size();
}

std::vector<std::vector<bool>> Gf2Matrix::kernel_basis() const {
  Gf2Matrix rref = *this;
  const std::vector<std::size_t> pivots = row_reduce(rref);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<bool>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<bool> v(cols_, false);
    v[free] = true;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (rref.get(r, free)) v[pivots[r]] = true;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Gf2Matrix Gf2Matrix::select_columns(const std::vector<std::size_t>& columns) const {
  Gf2Matrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) out.set(r, j, get(r, columns[j]));
  }
  return out;
}

Gf2Matrix Gf2Matrix::stacked(const Gf2Matrix& other) const {
  if (other.cols_ != cols_) throw UsageError("stacking matrices with different column counts");
  Gf2Matrix out = *this;
  out.rows_ += other.rows_;
  out.bits_.insert(out.bits_.end(), other.bits_.begin(), other.bits_.end());
  return out;
}

}  // namespace grassgb
