#ifndef GRASSGB_GF2_LINALG_HPP
#define GRASSGB_GF2_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace grassgb {

// Dense matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  bool column_is_zero(std::size_t c) const;
  std::size_t rank() const;
  // Basis of {x : A x = 0}; each vector has cols() entries.
  std::vector<std::vector<bool>> kernel_basis() const;
  // Submatrix on the given columns, in that order.
  Gf2Matrix select_columns(const std::vector<std::size_t>& columns) const;
  // Rows of this matrix followed by the rows of other; column counts must agree.
  Gf2Matrix stacked(const Gf2Matrix& other) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t words_per_row() const noexcept { return (cols_ + 63) / 64; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace grassgb

#endif  // GRASSGB_GF2_LINALG_HPP
