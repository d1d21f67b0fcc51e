#include "cspoly/matrix.hpp"

#include <utility>

#include "cspoly/errors.hpp"

namespace cspoly {

namespace {

// Row echelon form in place; returns (rank, sign of the row permutation).
std::pair<std::size_t, int> eliminate(RatMatrix& m) {
  std::size_t rank = 0;
  int sign = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Rat factor = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return {rank, sign};
}

}  // namespace

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) const {
  RatMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

std::size_t RatMatrix::rank() const {
  RatMatrix m = *this;
  return eliminate(m).first;
}

Rat RatMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  RatMatrix m = *this;
  const auto [rank, sign] = eliminate(m);
  if (rank < rows_) return Rat(0);
  Rat det(sign);
  for (std::size_t i = 0; i < rows_; ++i) det *= m(i, i);
  return det;
}

std::vector<Rat> RatMatrix::solve(const std::vector<Rat>& b) const {
  if (rows_ != cols_ || b.size() != rows_) throw InputError("solve: shape mismatch");
  RatMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  eliminate(aug);
  std::vector<Rat> x(cols_);
  for (std::size_t i = rows_; i-- > 0;) {
    if (aug(i, i).is_zero()) throw InvariantViolation("singular system");
    Rat acc = aug(i, cols_);
    for (std::size_t j = i + 1; j < cols_; ++j) acc -= aug(i, j) * x[j];
    x[i] = acc / aug(i, i);
  }
  return x;
}

bool RatMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < i && j < cols_; ++j) {
      if (!(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool RatMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace cspoly
