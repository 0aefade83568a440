#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tracealg/biseries.hpp"
#include "tracealg/expr.hpp"
#include "tracealg/freealg.hpp"
#include "tracealg/trace_engine.hpp"

namespace tracealg {

/// lead -> tail, from the monic element lead - tail.
struct RewriteRule {
  std::string name;
  GenMonomial lead;
  FreeElement tail;

  /// lead - tail.
  FreeElement element() const;
  /// The element with denominators cleared and content removed, the form
  /// with integer coefficients.
  FreeElement integral_form() const;
};

/// Normalizes f to a monic rule. Throws Error for zero.
RewriteRule make_rule(std::string name, const FreeElement& f);

/// Maps a sum of (products of traces of tr(x^i y^j), i + j = 2, 3, and of
/// v = tr(x^2 y^2) - tr(xyxy)) times words in x, y to K[U]<x1, y1>.
/// Throws Error when a trace factor cannot be written in those generators.
FreeElement rho(const TraceExpr& e);

/// f1, ..., f11.
const std::vector<RewriteRule>& groebner_basis();
std::vector<RewriteRule> build_basis();

/// Reduces the leftmost occurrence of a lead in the largest reducible
/// monomial, trying rules in the given order at each position, until every
/// monomial is normal.
FreeElement normal_form(const FreeElement& z, const std::vector<RewriteRule>& rules);
FreeElement normal_form(const FreeElement& z);

/// Image in the 3x3 matrices: u10 -> tr(X), u01 -> tr(Y), u_ij -> tr(x^i y^j),
/// u22 -> v, x1 -> x, y1 -> y, w33 -> w e.
Matrix3 pi_eval(const FreeElement& z);

/// Words over x1, y1, w33 of weight <= max_weight containing no lead word,
/// in increasing order.
std::vector<NCWord> normal_words(const std::vector<RewriteRule>& rules, int max_weight);
/// The normal words of the basis. Throws Error if the set is infinite.
std::vector<NCWord> normal_words();

struct GroebnerReport {
  bool pass = false;
  /// Names of rules whose image is nonzero.
  std::vector<std::string> nonzero_images;
  bool census_ok = false;
  /// Lowest-degree bidegree where the census differs from the series.
  std::optional<Bidegree> first_mismatch;
  Rational census_count;
  Rational series_count;
  std::size_t normal_word_count = 0;
  std::vector<std::string> details;
};

/// Checks pi(rule) = 0 for each rule and compares the count of normal
/// monomials with the Hilbert series of T32 up to total degree n.
GroebnerReport verify_groebner(const std::vector<RewriteRule>& rules, int n);
GroebnerReport verify_groebner(int n = 12);

/// Count of normal generalized monomials per bidegree up to total degree n.
BiSeries normal_monomial_census(const std::vector<RewriteRule>& rules, int n);

/// rho then normal_form; the coefficient of each normal word.
std::map<NCWord, MultiPoly> decompose_in_free_basis(const TraceExpr& e);

/// Reassembles sum coefficient * word.
FreeElement assemble(const std::map<NCWord, MultiPoly>& parts);

}  // namespace tracealg
