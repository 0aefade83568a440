#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "tracealg/expr.hpp"
#include "tracealg/poly.hpp"

namespace tracealg {

/// 3x3 matrix of polynomials over one catalogue.
class Matrix3 {
 public:
  explicit Matrix3(CataloguePtr cat);
  static Matrix3 identity(CataloguePtr cat);
  /// c on the diagonal.
  static Matrix3 scalar(const MultiPoly& c);

  const CataloguePtr& catalogue() const { return cat_; }
  MultiPoly& operator()(int r, int c) { return m_[static_cast<std::size_t>(3 * r + c)]; }
  const MultiPoly& operator()(int r, int c) const { return m_[static_cast<std::size_t>(3 * r + c)]; }

  MultiPoly trace() const;
  bool is_zero() const;

  Matrix3& operator+=(const Matrix3& o);
  Matrix3& operator-=(const Matrix3& o);
  friend Matrix3 operator+(Matrix3 a, const Matrix3& b) { return a += b; }
  friend Matrix3 operator-(Matrix3 a, const Matrix3& b) { return a -= b; }
  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
  friend Matrix3 operator*(const MultiPoly& c, const Matrix3& a);
  friend bool operator==(const Matrix3& a, const Matrix3& b);

  /// Nonzero entries as "(r,c): poly" lines, 1-based; "0" for the zero matrix.
  std::string to_string() const;

 private:
  CataloguePtr cat_;
  std::vector<MultiPoly> m_;
};

struct GenericPair {
  Matrix3 x;
  Matrix3 y;
};

/// x = diag(x1, x2, -(x1+x2)); y = (y_pq) with y33 = -(y11+y22), over
/// entry_catalogue().
GenericPair make_generic_pair();

using Value = std::variant<MultiPoly, Matrix3>;

/// Image under x, y -> the generic traceless pair; scalars become
/// polynomials in the entries, e becomes the identity.
Value eval_expr(const TraceExpr& e);
Matrix3 eval_matrix(const TraceExpr& e);
MultiPoly eval_scalar(const TraceExpr& e);

/// The derivation with delta(x) = 0, delta(y) = x, commuting with the trace.
/// Structurally zero summands are dropped.
TraceExpr delta(const TraceExpr& e);

/// delta applied n times, normalizing between steps.
TraceExpr delta_power(const TraceExpr& e, unsigned n);

/// True iff e evaluates to the zero polynomial or zero matrix.
bool verify_zero(const TraceExpr& e);

/// x1*d/dy11 + x2*d/dy22 on entry polynomials, the coordinate form of delta.
MultiPoly entry_delta(const MultiPoly& p);

}  // namespace tracealg
