#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tracealg/expr.hpp"
#include "tracealg/ratmatrix.hpp"

namespace tracealg {

/// A linear identity sum c_i * t_i = 0 between trace expressions.
struct Relation {
  std::string name;
  std::vector<std::pair<Rational, TraceExpr>> terms;

  TraceExpr expr() const;
  std::vector<TraceExpr> members() const;
  RatVector coefficients() const;
};

/// x^3 - 1/2 tr(x^2) x - 1/3 tr(x^3) e.
Relation cayley_hamilton();
/// The three partial linearizations of the relation above.
std::vector<Relation> degree3_linearizations();
Relation degree4_relation();
Relation degree6_relation();

/// Highest weight vectors of one weight together with the relations stated
/// for them, as coefficient vectors over the members.
struct HwvFamily {
  std::string name;
  Bidegree weight;
  std::vector<std::string> member_names;
  std::vector<TraceExpr> members;
  std::vector<RatVector> relations;
};

/// hwv-31, hwv-22, hwv-41, hwv-32, hwv-43.
const std::vector<HwvFamily>& hwv_families();
const HwvFamily& hwv_family(const std::string& name);

/// Basis of the linear relations among the family's evaluations. Throws
/// Error when members differ in sort or bidegree.
std::vector<RatVector> relation_nullspace(const std::vector<TraceExpr>& family);

/// "(a, b, c)".
std::string to_string(const RatVector& v);

struct SuiteResult {
  std::string name;
  bool pass = false;
  /// "0" on success, otherwise the first nonzero residual.
  std::string residual = "0";
  std::vector<std::string> details;
};

/// cayley-hamilton, degree-3-linearizations, degree-4, degree-6,
/// hwv-22, hwv-31, hwv-32, hwv-41, hwv-43, defining-relation,
/// w3pp-delta-sum.
std::vector<std::string> relation_suite_names();
SuiteResult run_relation_suite(const std::string& name);
/// Every suite, keyed by name.
std::map<std::string, SuiteResult> verify_relation_suites();

}  // namespace tracealg
