#include "tracealg/invariants.hpp"

#include "tracealg/expanded.hpp"
#include "tracealg/parser.hpp"
#include "tracealg/trace_engine.hpp"

namespace tracealg {

namespace {

TraceExpr p(std::string_view s) { return parse(s); }

TraceExpr det2(const TraceExpr& a, const TraceExpr& b, const TraceExpr& c, const TraceExpr& d) {
  return a * d - b * c;
}

TraceExpr det3(const std::vector<std::vector<TraceExpr>>& m) {
  auto minor = [&](int r1, int r2, int c1, int c2) { return det2(m[r1][c1], m[r1][c2], m[r2][c1], m[r2][c2]); };
  return TraceExpr::sum({
      m[0][0] * minor(1, 2, 1, 2),
      TraceExpr::neg(m[0][1] * minor(1, 2, 0, 2)),
      m[0][2] * minor(1, 2, 0, 1),
  });
}

std::vector<NamedInvariant> make_invariants() {
  const TraceExpr tx2 = p("tr(x^2)"), txy = p("tr(x*y)"), ty2 = p("tr(y^2)");
  const TraceExpr tx3 = p("tr(x^3)"), tx2y = p("tr(x^2*y)"), txy2 = p("tr(x*y^2)"), ty3 = p("tr(y^3)");

  const TraceExpr u = det2(tx2, txy, txy, ty2);
  const TraceExpr v = p("tr(x^2*y^2) - tr(x*y*x*y)");
  const TraceExpr w = p("tr(x^2*y^2*x*y) - tr(y^2*x^2*y*x)");
  const TraceExpr d3 = det3({{tx2, txy, ty2}, {tx3, tx2y, txy2}, {tx2y, txy2, ty3}});

  const TraceExpr w6 = TraceExpr::power(det2(tx3, txy2, tx2y, ty3), 2) -
                       TraceExpr::product({TraceExpr::constant(4), det2(ty3, txy2, txy2, tx2y),
                                           det2(tx3, tx2y, tx2y, txy2)});

  const TraceExpr w3pp = p(
      "5*(tr(y^2)^3*tr(x^3)^2 + tr(x^2)^3*tr(y^3)^2)"
      " - 30*(tr(y^2)^2*tr(x*y)*tr(x^2*y)*tr(x^3) + tr(x^2)^2*tr(x*y)*tr(y^3)*tr(x*y^2))"
      " + 3*((4*tr(y^2)*tr(x*y)^2 + tr(y^2)^2*tr(x^2))*(3*tr(x^2*y)^2 + 2*tr(x*y^2)*tr(x^3))"
      " + (4*tr(x*y)^2*tr(x^2) + tr(x^2)^2*tr(y^2))*(3*tr(x*y^2)^2 + 2*tr(x^2*y)*tr(y^3)))"
      " - 2*(2*tr(x*y)^3 + 3*tr(x^2)*tr(x*y)*tr(y^2))*(9*tr(x*y^2)*tr(x^2*y) + tr(x^3)*tr(y^3))");

  return {
      {"u", u},
      {"v", v},
      {"w", w},
      {"w1", TraceExpr::power(u, 3)},
      {"w2", TraceExpr::product({TraceExpr::power(u, 2), v})},
      {"w3'", u * d3},
      {"w3''", w3pp},
      {"w4", TraceExpr::product({u, TraceExpr::power(v, 2)})},
      {"w5", v * d3},
      {"w6", w6},
      {"w7", TraceExpr::power(v, 3)},
  };
}

}  // namespace

const std::vector<NamedInvariant>& invariant_exprs() {
  static const std::vector<NamedInvariant> table = make_invariants();
  return table;
}

const TraceExpr& invariant(std::string_view name) {
  for (const auto& inv : invariant_exprs()) {
    if (inv.name == name) return inv.expr;
  }
  throw Error("unknown invariant '" + std::string(name) + "'");
}

InvariantTable build_invariants() {
  InvariantTable out;
  for (const auto& inv : invariant_exprs()) out.emplace(inv.name, eval_scalar(inv.expr));
  return out;
}

TraceExpr defining_relation_rhs() {
  auto term = [](long num, long den, const char* name) {
    return make_rational(num, den) * invariant(name);
  };
  return TraceExpr::sum({
      term(1, 27, "w1"),
      term(-2, 9, "w2"),
      term(4, 15, "w3'"),
      term(1, 90, "w3''"),
      term(1, 3, "w4"),
      term(-2, 3, "w5"),
      term(-1, 3, "w6"),
      term(-4, 27, "w7"),
  });
}

TraceExpr defining_relation() {
  return TraceExpr::power(invariant("w"), 2) - defining_relation_rhs();
}

TraceExpr w3pp_delta_sum() {
  const TraceExpr a = p("tr(y^2)^3");
  const TraceExpr b = p("tr(y^3)^2");
  std::vector<TraceExpr> da{a}, db{b};
  for (int i = 1; i <= 6; ++i) {
    da.push_back(delta_power(da.back(), 1));
    db.push_back(delta_power(db.back(), 1));
  }
  ExpandedExpr acc(Sort::Scalar);
  for (int i = 0; i <= 6; ++i) {
    ExpandedExpr term = expand(da[static_cast<std::size_t>(i)]) * expand(db[static_cast<std::size_t>(6 - i)]);
    acc += term.scaled(make_rational(i % 2 == 0 ? 1 : -1, 144));
  }
  return to_expr(acc);
}

}  // namespace tracealg
