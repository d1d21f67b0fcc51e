#ifndef CSPOLY_MATRIX_HPP
#define CSPOLY_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "cspoly/rat.hpp"

namespace cspoly {

/// Dense exact matrix, row major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix submatrix(const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) const;

  std::size_t rank() const;
  /// Throws InputError unless square. The empty matrix has determinant 1.
  Rat determinant() const;
  /// Solves A x = b for square invertible A. Throws InvariantViolation if
  /// A is singular.
  std::vector<Rat> solve(const std::vector<Rat>& b) const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace cspoly

#endif
