#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tracealg/expr.hpp"

namespace tracealg {

/// Product of traces of words times a word. Trace words are stored as the
/// lexicographically least cyclic rotation and kept sorted, so equal trace
/// monomials compare equal. Scalar-sort terms have an empty word.
struct TraceTerm {
  std::vector<std::string> traces;
  std::string word;

  Bidegree bidegree() const;
  auto operator<=>(const TraceTerm&) const = default;
};

/// Fully expanded form of a trace expression: a rational combination of
/// TraceTerms. Uses tr(e) = 3 and tr(x) = tr(y) = 0, which hold for the
/// traceless generic matrices, and is otherwise a free-algebra expansion.
class ExpandedExpr {
 public:
  explicit ExpandedExpr(Sort sort) : sort_(sort) {}

  Sort sort() const { return sort_; }
  const std::map<TraceTerm, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const TraceTerm& t, const Rational& c);

  ExpandedExpr& operator+=(const ExpandedExpr& o);
  ExpandedExpr operator*(const ExpandedExpr& o) const;
  ExpandedExpr scaled(const Rational& c) const;

  friend bool operator==(const ExpandedExpr&, const ExpandedExpr&) = default;

 private:
  Sort sort_;
  std::map<TraceTerm, Rational> terms_;
};

/// Least rotation of a word over {x, y}.
std::string canonical_cyclic(const std::string& word);

ExpandedExpr expand(const TraceExpr& e);

/// Rebuilds a tree: a sum of constant * traces * word terms, with runs of a
/// letter written as powers.
TraceExpr to_expr(const ExpandedExpr& e);

/// expand followed by to_expr.
TraceExpr normalize(const TraceExpr& e);

/// The word as a product of letters, e.g. "xxy" -> x^2*y; "" -> e.
TraceExpr word_expr(const std::string& word);

}  // namespace tracealg
