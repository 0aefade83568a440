#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tracealg/expr.hpp"
#include "tracealg/poly.hpp"

namespace tracealg {

/// Two-row partition (l1, l2) with l1 >= l2 >= 0.
struct Partition2 {
  int l1 = 0;
  int l2 = 0;

  Partition2() = default;
  /// Throws Error unless l1 >= l2 >= 0.
  Partition2(int a, int b);
  int size() const { return l1 + l2; }
  auto operator<=>(const Partition2&) const = default;
};

std::string to_string(const Partition2& p);

/// Direct sum of irreducible GL2-modules W(lambda) with multiplicities.
class ModuleMultiset {
 public:
  void add(const Partition2& p, unsigned mult = 1);
  unsigned multiplicity(const Partition2& p) const;
  const std::map<Partition2, unsigned>& entries() const { return m_; }
  bool empty() const { return m_.empty(); }
  friend bool operator==(const ModuleMultiset&, const ModuleMultiset&) = default;
  /// e.g. "W(4,0) + 2W(2,2)"; "0" when empty.
  std::string to_string() const;

 private:
  std::map<Partition2, unsigned> m_;
};

/// (t1 t2)^l2 (t1^(l1-l2) + t1^(l1-l2-1) t2 + ... + t2^(l1-l2)).
MultiPoly schur_poly(const Partition2& p);

/// Number of standard tableaux of the shape, by the hook length formula.
mpz_class multiplicity_d(const Partition2& p);

/// W(lambda) (x) W(mu) by the two-row Littlewood-Richardson rule.
ModuleMultiset lr_tensor(const Partition2& lambda, const Partition2& mu);

/// Raised when a polynomial is not a nonnegative combination of Schur
/// polynomials.
class NotSchurPositive : public Error {
 public:
  using Error::Error;
};

/// Peels off S(a,b) for the monomial t1^a t2^b with the largest a, degree by
/// degree.
ModuleMultiset schur_decompose(const MultiPoly& p);

/// Sum of multiplicity * schur_poly.
MultiPoly character(const ModuleMultiset& m);

/// True iff delta(e) evaluates to zero and the x-degree is at least the
/// y-degree. Throws Error for inhomogeneous input.
bool is_hwv(const TraceExpr& e);

/// Standard tableau of a two-row shape. Stored through the filling
/// permutation sigma: the top row reads sigma(1), sigma(3), ...,
/// sigma(2 l2 - 1), sigma(2 l2 + 1), ..., sigma(k) and the bottom row reads
/// sigma(2), sigma(4), ..., sigma(2 l2).
class Tableau2 {
 public:
  /// sigma is one-based: sigma[i-1] = sigma(i). Throws Error unless it is a
  /// permutation of 1..k giving a standard tableau.
  Tableau2(Partition2 shape, std::vector<int> sigma);
  static Tableau2 from_rows(const std::vector<int>& top, const std::vector<int>& bottom);

  const Partition2& shape() const { return shape_; }
  const std::vector<int>& sigma() const { return sigma_; }
  std::vector<int> top() const;
  std::vector<int> bottom() const;

 private:
  Partition2 shape_;
  std::vector<int> sigma_;
};

/// All standard tableaux of the shape.
std::vector<Tableau2> standard_tableaux(const Partition2& p);

/// Signed sum of words with x, y skew-symmetrized at positions
/// (sigma(1), sigma(2)), ..., (sigma(2s-1), sigma(2s)) and x elsewhere.
TraceExpr tableau_hwv(const Tableau2& t);

}  // namespace tracealg
