#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tracealg/poly.hpp"
#include "tracealg/rational.hpp"

namespace tracealg {

/// Raised when an expression would be ill-sorted, e.g. the trace of a scalar.
class SortError : public Error {
 public:
  using Error::Error;
};

enum class Sort { Matrix, Scalar };

enum class ExprKind {
  LetterX,
  LetterY,
  Identity,
  Constant,
  Trace,
  Sum,
  Neg,
  Product,
  Commutator,
  Anticommutator,
  Power,
};

/// Immutable, well-sorted expression tree over the traceless generic
/// matrices x, y, the identity e and traces of matrix expressions.
///
/// Matrix sort: letters, e, products and sums of matrices, scalar multiples,
/// commutators [a,b] and anticommutators a o b. Scalar sort: rational
/// constants, traces, and sums/products/powers of scalars.
///
/// The factory functions keep trees canonical: constants are never negative
/// (a negative value becomes Neg of a constant), and one-element sums and
/// products collapse to their element. Nested sums and products are kept as
/// written.
class TraceExpr {
 public:
  static TraceExpr x();
  static TraceExpr y();
  static TraceExpr identity();
  static TraceExpr constant(const Rational& c);
  static TraceExpr zero(Sort sort);
  static TraceExpr trace(const TraceExpr& a);
  static TraceExpr sum(std::vector<TraceExpr> terms);
  static TraceExpr neg(const TraceExpr& a);
  static TraceExpr product(std::vector<TraceExpr> factors);
  static TraceExpr commutator(const TraceExpr& a, const TraceExpr& b);
  static TraceExpr anticommutator(const TraceExpr& a, const TraceExpr& b);
  static TraceExpr power(const TraceExpr& base, unsigned n);

  ExprKind kind() const;
  Sort sort() const;
  /// nullopt for inhomogeneous sums.
  std::optional<Bidegree> bidegree() const;
  const std::vector<TraceExpr>& children() const;
  /// Constant nodes only.
  const Rational& value() const;
  /// Power nodes only.
  unsigned exponent() const;

  /// Constant 0, or a product with a constant-0 factor.
  bool is_structural_zero() const;

  /// Identity of the underlying node, for memoization.
  const void* id() const { return node_.get(); }

  friend bool operator==(const TraceExpr& a, const TraceExpr& b);

 private:
  struct Node;
  explicit TraceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

TraceExpr operator+(const TraceExpr& a, const TraceExpr& b);
TraceExpr operator-(const TraceExpr& a, const TraceExpr& b);
TraceExpr operator-(const TraceExpr& a);
TraceExpr operator*(const TraceExpr& a, const TraceExpr& b);
TraceExpr operator*(const Rational& c, const TraceExpr& a);

/// Exchanges the letters x and y everywhere.
TraceExpr swap_letters(const TraceExpr& e);

/// Number of nodes, for size guards in tests.
std::size_t node_count(const TraceExpr& e);

}  // namespace tracealg
