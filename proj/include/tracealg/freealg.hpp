#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tracealg/poly.hpp"

namespace tracealg {

/// Word over the letters x1, y1, w33, stored one character per letter as
/// 'x', 'y', 'w'.
using NCWord = std::string;

/// x1, y1 weigh 1 and w33 weighs 6.
int word_weight(const NCWord& w);
/// x1 -> (1,0), y1 -> (0,1), w33 -> (3,3).
Bidegree word_bidegree(const NCWord& w);
/// e.g. "y1^2*x1*y1*x1^2"; "1" for the empty word.
std::string word_to_string(const NCWord& w);
/// Word order: weight, then fewer w33 letters, then lexicographic with
/// w33 > x1 > y1.
std::strong_ordering compare_words(const NCWord& a, const NCWord& b);

/// Product of a commutative monomial in the u-variables and a word.
struct GenMonomial {
  CommMonomial u;
  NCWord word;

  Bidegree bidegree() const;
  std::string to_string() const;
  bool operator==(const GenMonomial&) const = default;
};

/// Words first, then the u-parts by degree and lexicographically with
/// u10 > u01 > ... > u22.
std::strong_ordering compare(const GenMonomial& a, const GenMonomial& b);

struct GenMonomialLess {
  bool operator()(const GenMonomial& a, const GenMonomial& b) const { return compare(a, b) < 0; }
};

GenMonomial operator*(const GenMonomial& a, const GenMonomial& b);

/// Witness m = c * h1 * d * h2.
struct Division {
  CommMonomial c;
  NCWord h1;
  NCWord h2;
};

/// Uses the leftmost occurrence of d's word in m's word.
std::optional<Division> divides(const GenMonomial& d, const GenMonomial& m);

/// Rational combination of generalized monomials.
class FreeElement {
 public:
  using TermMap = std::map<GenMonomial, Rational, GenMonomialLess>;

  FreeElement() = default;
  static FreeElement monomial(const GenMonomial& m, const Rational& c = 1);
  static FreeElement constant(const Rational& c);
  /// u-variable by catalogue name, or one of the letters x1, y1, w33.
  static FreeElement generator(std::string_view name);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const GenMonomial& m) const;
  /// Largest monomial. Throws Error for zero.
  const GenMonomial& lead() const;
  const Rational& lead_coefficient() const;

  void add_term(const GenMonomial& m, const Rational& c);
  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  FreeElement& operator*=(const Rational& c);
  FreeElement operator-() const;
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(FreeElement a, const Rational& c) { return a *= c; }
  friend FreeElement operator*(const Rational& c, FreeElement a) { return a *= c; }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }
  FreeElement pow(unsigned n) const;

  /// c * h1 * this * h2.
  FreeElement multiplied(const CommMonomial& c, const NCWord& h1, const NCWord& h2) const;

  /// Largest monomial first, e.g. "x1^3 - 1/2*u20*x1 - 1/3*u30".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Parses sums and products of rationals, u-variables and the letters x1,
/// y1, w33 with "^", "*", "+", "-" and parentheses. Products are
/// noncommutative in the letters.
FreeElement parse_free(std::string_view text);

}  // namespace tracealg
