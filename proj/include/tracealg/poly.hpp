#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracealg/rational.hpp"

namespace tracealg {

/// Degree in x and degree in y.
struct Bidegree {
  int x = 0;
  int y = 0;

  int total() const { return x + y; }
  Bidegree operator+(const Bidegree& o) const { return {x + o.x, y + o.y}; }
  Bidegree operator-(const Bidegree& o) const { return {x - o.x, y - o.y}; }
  Bidegree operator*(int k) const { return {x * k, y * k}; }
  auto operator<=>(const Bidegree&) const = default;
};

std::string to_string(const Bidegree& b);

inline constexpr std::size_t kMaxVars = 16;

/// Ordered, immutable list of named commuting variables.
class VarCatalogue {
 public:
  struct Var {
    std::string name;
    Bidegree bidegree;
  };

  explicit VarCatalogue(std::vector<Var> vars);

  std::size_t size() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_.at(i).name; }
  const Bidegree& bidegree(std::size_t i) const { return vars_.at(i).bidegree; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

 private:
  std::vector<Var> vars_;
};

using CataloguePtr = std::shared_ptr<const VarCatalogue>;

/// x1, x2, y11, y12, y13, y21, y22, y23, y31, y32 followed by tX, tY, the
/// traces of the non-traceless generic matrices. Only the first ten appear in
/// the traceless matrices; tX and tY are needed for the image of u10, u01.
const CataloguePtr& entry_catalogue();
/// u10, u01, u20, u11, u02, u30, u21, u12, u03, u22.
const CataloguePtr& u_catalogue();
/// t1, t2.
const CataloguePtr& series_catalogue();

/// Exponent vector. Ordered by total degree, then lexicographically with the
/// first variable most significant.
class CommMonomial {
 public:
  CommMonomial() = default;

  static CommMonomial variable(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t i) const { return exps_[i]; }
  void set_exponent(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  Bidegree bidegree(const VarCatalogue& cat) const;

  CommMonomial operator*(const CommMonomial& o) const;
  bool divides(const CommMonomial& o) const;
  /// this / d; requires d.divides(*this).
  CommMonomial quotient(const CommMonomial& d) const;

  std::strong_ordering operator<=>(const CommMonomial& o) const;
  bool operator==(const CommMonomial& o) const = default;

  std::string to_string(const VarCatalogue& cat) const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

/// Sparse polynomial with exact rational coefficients over a fixed catalogue.
/// Zero is the empty map; no stored coefficient is zero.
class MultiPoly {
 public:
  using TermMap = std::map<CommMonomial, Rational>;

  explicit MultiPoly(CataloguePtr cat);

  static MultiPoly constant(CataloguePtr cat, const Rational& c);
  static MultiPoly variable(CataloguePtr cat, std::size_t index);
  static MultiPoly variable(CataloguePtr cat, std::string_view name);
  static MultiPoly monomial(CataloguePtr cat, const CommMonomial& m, const Rational& c);

  const CataloguePtr& catalogue() const { return cat_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const CommMonomial& m) const;
  /// Bidegree of every monomial, or nullopt when mixed or zero.
  std::optional<Bidegree> bidegree() const;

  void add_term(const CommMonomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned n) const;
  MultiPoly derivative(std::size_t var) const;

  /// Terms from the largest monomial down, e.g. "x1^2 + 2*x1*x2 + x2^2".
  std::string to_string() const;

 private:
  void check_same(const MultiPoly& o) const;

  CataloguePtr cat_;
  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };

/// Exact sum, difference or product. Throws Error on catalogue mismatch.
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

/// Image of p under the ring homomorphism sending variable i to bindings[i].
/// Unbound variables pass through unchanged, which requires the bindings to
/// live in p's own catalogue.
MultiPoly substitute(const MultiPoly& p, const std::map<std::size_t, MultiPoly>& bindings);

}  // namespace tracealg
