#include "tracealg/ratmatrix.hpp"

#include <algorithm>

namespace tracealg {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(const std::vector<RatVector>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw Error("matrix-vector size mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

// ---------------------------------------------------------------------------

RowEchelon::RowEchelon(std::size_t cols) : cols_(cols) {}

bool RowEchelon::add_row(RatVector row) {
  if (row.size() != cols_) throw Error("row length mismatch");
  if (basis_.size() == cols_) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = row[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (basis_[i][c] != 0) row[c] -= f * basis_[i][c];
    }
  }
  auto lead = std::find_if(row.begin(), row.end(), [](const Rational& q) { return q != 0; });
  if (lead == row.end()) return false;
  const std::size_t p = static_cast<std::size_t>(lead - row.begin());
  const Rational inv = 1 / row[p];
  for (auto& q : row) q *= inv;
  // Keep the stored rows fully reduced in the new pivot column.
  for (auto& b : basis_) {
    const Rational f = b[p];
    if (f == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] != 0) b[c] -= f * row[c];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  basis_.insert(basis_.begin() + idx, std::move(row));
  return true;
}

std::vector<RatVector> RowEchelon::kernel() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<RatVector> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) v[pivots_[i]] = -basis_[i][f];
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    const Rational inv = 1 / *lead;
    for (auto& q : v) q *= inv;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("nullspace of an empty matrix");
  RowEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.add_row(m.row(r));
  return ech.kernel();
}

std::size_t rank(const RatMatrix& m) {
  if (m.cols() == 0) return 0;
  RowEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.add_row(m.row(r));
  return ech.rank();
}

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
  RowEchelon ech(v.size());
  for (const auto& b : basis) ech.add_row(b);
  return !ech.add_row(v);
}

}  // namespace tracealg
