#pragma once

#include <cstddef>
#include <vector>

#include "tracealg/rational.hpp"

namespace tracealg {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RatVector row(std::size_t r) const;

  RatVector operator*(const RatVector& v) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Incremental exact row echelon form. Rows are fed one at a time and kept
/// fully reduced, so memory stays at most cols x cols regardless of how many
/// equations are fed.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols);

  /// Returns true when the row increased the rank.
  bool add_row(RatVector row);
  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }
  /// Kernel basis: one vector per free column, scaled so its first nonzero
  /// coordinate is 1, ordered by free column.
  std::vector<RatVector> kernel() const;

 private:
  std::size_t cols_;
  std::vector<RatVector> basis_;      // reduced rows, pivot entry 1
  std::vector<std::size_t> pivots_;   // pivot column of each row
};

/// Exact basis of { v : m v = 0 } in canonical form. Throws on an empty matrix.
std::vector<RatVector> nullspace(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// True when v lies in the span of basis.
bool in_span(const std::vector<RatVector>& basis, const RatVector& v);

}  // namespace tracealg
