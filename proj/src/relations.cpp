#include "tracealg/relations.hpp"

#include <algorithm>

#include "tracealg/invariants.hpp"
#include "tracealg/parser.hpp"
#include "tracealg/trace_engine.hpp"

namespace tracealg {

TraceExpr Relation::expr() const {
  std::vector<TraceExpr> ts;
  for (const auto& [c, t] : terms) ts.push_back(c == 1 ? t : c * t);
  return TraceExpr::sum(std::move(ts));
}

std::vector<TraceExpr> Relation::members() const {
  std::vector<TraceExpr> out;
  for (const auto& term : terms) out.push_back(term.second);
  return out;
}

RatVector Relation::coefficients() const {
  RatVector out;
  for (const auto& term : terms) out.push_back(term.first);
  return out;
}

namespace {

Relation relation(std::string name, std::initializer_list<std::pair<const char*, const char*>> terms) {
  Relation r{std::move(name), {}};
  for (const auto& [c, t] : terms) r.terms.emplace_back(parse_rational(c), parse(t));
  return r;
}

RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

HwvFamily family(std::string name, Bidegree weight, int first_index, std::initializer_list<const char*> members,
                 std::vector<RatVector> relations) {
  HwvFamily f{std::move(name), weight, {}, {}, std::move(relations)};
  int i = first_index;
  for (const char* m : members) {
    f.member_names.push_back("u" + std::to_string(i++));
    f.members.push_back(parse(m));
  }
  return f;
}

std::vector<HwvFamily> make_families() {
  std::vector<HwvFamily> out;
  out.push_back(family("hwv-31", {3, 1}, 1,
                       {
                           "[x,y]*x^2",
                           "[x^2,y]*x",
                           "[x^3,y]",
                           "tr(x^2)*(x o y) - 2*tr(x*y)*x^2",
                           "tr(x^2)*[x,y]",
                           "tr(x^3)*y - tr(x^2*y)*x",
                       },
                       {vec({2, 2, 0, 1, -1, 2}), vec({0, 0, 2, 0, -1, 0})}));
  out.push_back(family("hwv-22", {2, 2}, 1,
                       {
                           "[x,y]^2",
                           "x*[x,y^2] + y*[y,x^2]",
                           "tr(x^2)*y^2 - tr(x*y)*(x o y) + tr(y^2)*x^2",
                           "(tr(x^2)*tr(y^2) - tr(x*y)^2)*e",
                           "(tr(x^2*y^2) - tr(x*y*x*y))*e",
                       },
                       {vec({3, -3, 3, -2, 2})}));
  out.push_back(family("hwv-41", {4, 1}, 1,
                       {
                           "[x,y]*x^3",
                           "[x^2,y]*x^2",
                           "[x^3,y]*x",
                           "[x^4,y]",
                           "tr(x^2)*[x,y]*x",
                           "tr(x^2)*[x^2,y]",
                           "tr(x^3)*(x o y) - 2*tr(x^2*y)*x^2",
                           "tr(x^3)*[x,y]",
                           "tr(x^2)*(tr(x^2)*y - tr(x*y)*x)",
                           "(tr(x^2)*tr(x^2*y) - tr(x*y)*tr(x^3))*e",
                       },
                       {
                           vec({6, 0, 0, 0, -3, 0, 0, -2, 0, 0}),
                           vec({0, 6, 0, 0, 1, -2, 3, -1, 1, 2}),
                           vec({0, 0, 2, 0, -1, 0, 0, 0, 0, 0}),
                           vec({0, 0, 0, 6, 0, -3, 0, -2, 0, 0}),
                       }));
  out.push_back(family("hwv-32", {3, 2}, 1,
                       {
                           "[x,y]^2*x",
                           "(x*[x,y^2] + y*[y,x^2])*x",
                           "[x,y]*[x^2,y]",
                           "[x^2,y*x]*y + [y^2*x,x]*x",
                           "[x^3,y]*y + (y^2*x^2 - x*y*x*y)*x",
                           "tr(x^2)*[x,y]*y - tr(x*y)*[x,y]*x",
                           "tr(x^2)*[x,y^2] - tr(x*y)*[x^2,y]",
                           "tr(x^3)*y^2 - tr(x^2*y)*(x o y) + tr(x*y^2)*x^2",
                           "(tr(x^2)*tr(y^2) - tr(x*y)^2)*x",
                           "(tr(x^2*y^2) - tr(x*y*x*y))*x",
                           "(tr(x^2)*tr(x*y^2) - 2*tr(x*y)*tr(x^2*y) + tr(y^2)*tr(x^3))*e",
                       },
                       {
                           vec({6, 0, -6, 0, 0, 4, -2, -6, -2, 4, 1}),
                           vec({0, 6, -6, 0, 0, 2, 2, -6, -2, 0, -1}),
                           vec({0, 0, 0, 6, 0, -2, 4, 0, 0, 2, 1}),
                           vec({0, 0, 0, 0, 6, -4, 2, 0, 0, -2, -1}),
                       }));
  out.push_back(family(
      "hwv-43", {4, 3}, 0,
      {
          "(tr(x^2*y^2*x*y) - tr(y^2*x^2*y*x))*x",
          "(tr(x*y)*tr(y^2)*tr(x^3) - 2*tr(x*y)^2*tr(x^2*y) - tr(x^2)*tr(y^2)*tr(x^2*y)"
          " + 3*tr(x^2)*tr(x*y)*tr(x*y^2) - tr(x^2)^2*tr(y^3))*e",
          "(tr(x^2)*tr(y^2) - tr(x*y)^2)*(tr(x^2)*y - tr(x*y)*x)",
          "(tr(x^2*y^2) - tr(x*y*x*y))*(tr(x^2)*y - tr(x*y)*x)",
          "tr(x^3)*(tr(y^3)*x - 2*tr(x*y^2)*y) - tr(x^2*y)*(tr(x*y^2)*x - 2*tr(x^2*y)*y)",
          "tr(x^2)*(tr(y^3)*x^2 - tr(x*y^2)*(x o y) + tr(x^2*y)*y^2)"
          " - tr(x*y)*(tr(x*y^2)*x^2 - tr(x^2*y)*(x o y) + tr(x^3)*y^2)",
          "2*(tr(x*y)*tr(x*y^2) - tr(y^2)*tr(x^2*y))*x^2 - (tr(x^2)*tr(x*y^2) - tr(y^2)*tr(x^3))*(x o y)"
          " + 2*(tr(x^2)*tr(x^2*y) - tr(x*y)*tr(x^3))*y^2",
          "(tr(x^2)*tr(x*y^2) - 2*tr(x*y)*tr(x^2*y) + tr(y^2)*tr(x^3))*[x,y]",
          "(tr(x^2)*tr(y^2) - tr(x*y)^2)*[x,y]*x",
          "(tr(x^2*y^2) - tr(x*y*x*y))*[x,y]*x",
          "(tr(x^2)*tr(y^2) - tr(x*y)^2)*[x^2,y]",
          "(tr(x^2*y^2) - tr(x*y*x*y))*[x^2,y]",
          "tr(x^3)*[x,y]*y^2 - tr(x^2*y)*[x,y]*(x o y) + tr(x*y^2)*[x,y]*x^2",
          "tr(x^2)*[x,y]^2*y - tr(x*y)*[x,y]^2*x",
      },
      {vec({18, -4, -2, 10, 18, -6, 9, 15, -4, 0, -4, 12, -36, 12})}));
  return out;
}

std::string residual_text(const Value& v) {
  if (const auto* p = std::get_if<MultiPoly>(&v)) return p->is_zero() ? "0" : p->to_string();
  return std::get<Matrix3>(v).to_string();
}

bool is_zero(const Value& v) {
  if (const auto* p = std::get_if<MultiPoly>(&v)) return p->is_zero();
  return std::get<Matrix3>(v).is_zero();
}

TraceExpr combine(const std::vector<TraceExpr>& members, const RatVector& coeffs) {
  std::vector<TraceExpr> ts;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (coeffs[i] != 0) ts.push_back(coeffs[i] * members[i]);
  }
  if (ts.empty()) return TraceExpr::zero(members.front().sort());
  return TraceExpr::sum(std::move(ts));
}

SuiteResult check_relations(const std::string& name, const std::vector<Relation>& rels) {
  SuiteResult r{name, true, "0", {}};
  for (const auto& rel : rels) {
    Value v = eval_expr(rel.expr());
    const bool ok = is_zero(v);
    r.details.push_back(rel.name + ": " + (ok ? "zero" : "nonzero"));
    if (!ok && r.pass) {
      r.pass = false;
      r.residual = residual_text(v);
    }
    if (!ok) {
      auto kernel = relation_nullspace(rel.members());
      r.details.push_back(rel.name + ": nullspace over its " + std::to_string(rel.terms.size()) +
                          " terms has dimension " + std::to_string(kernel.size()));
      for (const auto& k : kernel) r.details.push_back(rel.name + ": kernel vector " + to_string(k));
      r.details.push_back(rel.name + ": stated coefficients " +
                          (in_span(kernel, rel.coefficients()) ? "lie" : "do not lie") + " in the nullspace");
    }
  }
  return r;
}

SuiteResult check_family(const HwvFamily& f) {
  SuiteResult r{f.name, true, "0", {}};
  for (std::size_t i = 0; i < f.relations.size(); ++i) {
    Value v = eval_expr(combine(f.members, f.relations[i]));
    const bool ok = is_zero(v);
    r.details.push_back("relation " + std::to_string(i + 1) + " " + to_string(f.relations[i]) + ": " +
                        (ok ? "zero" : "nonzero"));
    if (!ok && r.pass) {
      r.pass = false;
      r.residual = residual_text(v);
    }
  }
  auto kernel = relation_nullspace(f.members);
  const bool dim_ok = kernel.size() == f.relations.size();
  r.details.push_back("nullspace dimension " + std::to_string(kernel.size()) + ", stated relations " +
                      std::to_string(f.relations.size()));
  for (const auto& k : kernel) r.details.push_back("kernel vector " + to_string(k));
  bool span_ok = true;
  for (const auto& rel : f.relations) span_ok = span_ok && in_span(kernel, rel);
  r.details.push_back(std::string("stated relations ") + (span_ok ? "lie" : "do not lie") + " in the nullspace");
  r.pass = r.pass && dim_ok && span_ok;
  return r;
}

SuiteResult check_scalar_zero(const std::string& name, const TraceExpr& e) {
  MultiPoly p = eval_scalar(e);
  SuiteResult r{name, p.is_zero(), p.is_zero() ? "0" : p.to_string(), {}};
  r.details.push_back(name + (p.is_zero() ? ": zero polynomial" : ": nonzero polynomial"));
  return r;
}

}  // namespace

Relation cayley_hamilton() {
  return relation("cayley-hamilton", {{"1", "x^3"}, {"-1/2", "tr(x^2)*x"}, {"-1/3", "tr(x^3)*e"}});
}

std::vector<Relation> degree3_linearizations() {
  return {
      relation("linearization-x2y", {{"1", "x^2*y"},
                                     {"1", "x*y*x"},
                                     {"1", "y*x^2"},
                                     {"-1", "tr(x*y)*x"},
                                     {"-1/2", "tr(x^2)*y"},
                                     {"-1", "tr(x^2*y)*e"}}),
      relation("linearization-xy2", {{"1", "x*y^2"},
                                     {"1", "y*x*y"},
                                     {"1", "y^2*x"},
                                     {"-1/2", "tr(y^2)*x"},
                                     {"-1", "tr(x*y)*y"},
                                     {"-1", "tr(x*y^2)*e"}}),
      relation("linearization-y3", {{"1", "y^3"}, {"-1/2", "tr(y^2)*y"}, {"-1/3", "tr(y^3)*e"}}),
  };
}

Relation degree4_relation() {
  return relation("degree-4", {{"6", "(x*y)^2"},
                               {"-6", "y^2*x^2"},
                               {"3", "tr(y^2)*x^2"},
                               {"-6", "tr(x*y)*x*y"},
                               {"3", "tr(x^2)*y^2"},
                               {"-2", "tr(x^2)*tr(y^2)*e"},
                               {"2", "tr(x*y)^2*e"},
                               {"2", "(tr(x^2*y^2) - tr(x*y*x*y))*e"}});
}

Relation degree6_relation() {
  return relation("degree-6", {
                                  {"36", "y^2*x*y*x^2"},
                                  {"-6", "tr(y^2)*x*y*x^2"},
                                  {"12", "tr(x*y)*(y*x)^2"},
                                  {"-12", "tr(x*y)*y^2*x^2"},
                                  {"-6", "tr(x^2)*y^2*x*y"},
                                  {"12", "tr(x*y^2)*x*y*x"},
                                  {"-12", "tr(x*y^2)*y*x*x"},
                                  {"12", "tr(x^2*y)*y*x*y"},
                                  {"-12", "tr(x^2*y)*y*y*x"},
                                  {"-1", "tr(x^2)*tr(y^2)*x*y"},
                                  {"4", "tr(x*y)^2*x*y"},
                                  {"4", "(tr(x^2*y^2) - tr(x*y*x*y))*x*y"},
                                  {"-2", "tr(x^2)*tr(y^2)*y*x"},
                                  {"-4", "tr(x*y)^2*y*x"},
                                  {"8", "(tr(x^2*y^2) - tr(x*y*x*y))*y*x"},
                                  {"2", "tr(x^2)*tr(y^3)*x"},
                                  {"-12", "tr(x*y)*tr(x*y^2)*x"},
                                  {"6", "tr(y^2)*tr(x^2*y)*x"},
                                  {"2", "tr(y^2)*tr(x^3)*y"},
                                  {"-12", "tr(x*y)*tr(x^2*y)*y"},
                                  {"6", "tr(x^2)*tr(x*y^2)*y"},
                                  {"2", "tr(x^2)*tr(x*y)*tr(y^2)*e"},
                                  {"-1", "tr(x*y)^3*e"},
                                  {"1", "tr(x^3)*tr(y^3)*e"},
                                  {"-3", "tr(x^2*y)*tr(x*y^2)*e"},
                                  {"-1", "(tr(x^2*y^2) - tr(x*y*x*y))*tr(x*y)*e"},
                                  {"-3", "(tr(x^2*y^2*x*y) - tr(y^2*x^2*y*x))*e"},
                              });
}

const std::vector<HwvFamily>& hwv_families() {
  static const std::vector<HwvFamily> fams = make_families();
  return fams;
}

const HwvFamily& hwv_family(const std::string& name) {
  for (const auto& f : hwv_families()) {
    if (f.name == name) return f;
  }
  throw Error("unknown family '" + name + "'");
}

std::vector<RatVector> relation_nullspace(const std::vector<TraceExpr>& family) {
  if (family.empty()) throw Error("empty family");
  const Sort sort = family.front().sort();
  const auto bd = family.front().bidegree();
  for (const auto& m : family) {
    if (m.sort() != sort) throw Error("family members differ in sort");
    if (!m.bidegree() || m.bidegree() != bd) throw Error("family members differ in bidegree");
  }
  const std::size_t n = family.size();
  std::map<std::pair<int, CommMonomial>, RatVector> slots;
  auto record = [&](int entry, const MultiPoly& p, std::size_t col) {
    for (const auto& [mono, c] : p.terms()) {
      auto [it, fresh] = slots.try_emplace({entry, mono});
      if (fresh) it->second.assign(n, Rational(0));
      it->second[col] = c;
    }
  };
  for (std::size_t col = 0; col < n; ++col) {
    Value v = eval_expr(family[col]);
    if (const auto* p = std::get_if<MultiPoly>(&v)) {
      record(0, *p, col);
    } else {
      const auto& m = std::get<Matrix3>(v);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) record(3 * i + j, m(i, j), col);
      }
    }
  }
  RowEchelon ech(n);
  for (auto& [slot, row] : slots) ech.add_row(std::move(row));
  return ech.kernel();
}

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::vector<std::string> relation_suite_names() {
  return {"cayley-hamilton", "defining-relation", "degree-3-linearizations", "degree-4", "degree-6",
          "hwv-22",        "hwv-31",          "hwv-32",                "hwv-41", "hwv-43",
          "w3pp-delta-sum"};
}

SuiteResult run_relation_suite(const std::string& name) {
  if (name == "cayley-hamilton") return check_relations(name, {cayley_hamilton()});
  if (name == "degree-3-linearizations") return check_relations(name, degree3_linearizations());
  if (name == "degree-4") return check_relations(name, {degree4_relation()});
  if (name == "degree-6") return check_relations(name, {degree6_relation()});
  if (name.starts_with("hwv-")) return check_family(hwv_family(name));
  if (name == "defining-relation") return check_scalar_zero(name, defining_relation());
  if (name == "w3pp-delta-sum") return check_scalar_zero(name, invariant("w3''") - w3pp_delta_sum());
  throw Error("unknown suite '" + name + "'");
}

std::map<std::string, SuiteResult> verify_relation_suites() {
  std::map<std::string, SuiteResult> out;
  for (const auto& n : relation_suite_names()) out.emplace(n, run_relation_suite(n));
  return out;
}

}  // namespace tracealg
