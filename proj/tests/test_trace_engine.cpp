#include <doctest.h>

#include <array>

#include "generators.hpp"
#include "tracealg/invariants.hpp"
#include "tracealg/parser.hpp"
#include "tracealg/trace_engine.hpp"

using namespace tracealg;
using testgen::Rng;

namespace {

// Plain 3x3 rational arithmetic, independent of the symbolic engine.
using Num = std::array<Rational, 9>;

Num num_identity() {
  Num m{};
  m[0] = m[4] = m[8] = 1;
  return m;
}
Num num_scale(const Rational& c, Num m) {
  for (auto& v : m) v *= c;
  return m;
}
Num num_add(Num a, const Num& b) {
  for (int i = 0; i < 9; ++i) a[i] += b[i];
  return a;
}
Num num_mul(const Num& a, const Num& b) {
  Num r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[3 * i + j] += a[3 * i + k] * b[3 * k + j];
  return r;
}
Rational num_trace(const Num& a) { return a[0] + a[4] + a[8]; }

struct NumVal {
  bool matrix;
  Rational s;
  Num m;
};

NumVal num_eval(const TraceExpr& e, const Num& x, const Num& y) {
  auto mul = [](const NumVal& a, const NumVal& b) -> NumVal {
    if (a.matrix && b.matrix) return {true, 0, num_mul(a.m, b.m)};
    if (a.matrix) return {true, 0, num_scale(b.s, a.m)};
    if (b.matrix) return {true, 0, num_scale(a.s, b.m)};
    return {false, a.s * b.s, {}};
  };
  auto add = [](const NumVal& a, const NumVal& b) -> NumVal {
    if (a.matrix) return {true, 0, num_add(a.m, b.m)};
    return {false, a.s + b.s, {}};
  };
  auto neg = [](NumVal a) {
    a.s = -a.s;
    a.m = num_scale(-1, a.m);
    return a;
  };
  const auto& ch = e.children();
  switch (e.kind()) {
    case ExprKind::LetterX: return {true, 0, x};
    case ExprKind::LetterY: return {true, 0, y};
    case ExprKind::Identity: return {true, 0, num_identity()};
    case ExprKind::Constant: return {false, e.value(), {}};
    case ExprKind::Trace: return {false, num_trace(num_eval(ch[0], x, y).m), {}};
    case ExprKind::Neg: return neg(num_eval(ch[0], x, y));
    case ExprKind::Sum: {
      NumVal acc = num_eval(ch[0], x, y);
      for (std::size_t i = 1; i < ch.size(); ++i) acc = add(acc, num_eval(ch[i], x, y));
      return acc;
    }
    case ExprKind::Product: {
      NumVal acc = num_eval(ch[0], x, y);
      for (std::size_t i = 1; i < ch.size(); ++i) acc = mul(acc, num_eval(ch[i], x, y));
      return acc;
    }
    case ExprKind::Commutator:
    case ExprKind::Anticommutator: {
      const NumVal a = num_eval(ch[0], x, y), b = num_eval(ch[1], x, y);
      const NumVal ba = mul(b, a);
      return add(mul(a, b), e.kind() == ExprKind::Commutator ? neg(ba) : ba);
    }
    case ExprKind::Power: {
      const NumVal b = num_eval(ch[0], x, y);
      NumVal acc = b.matrix ? NumVal{true, 0, num_identity()} : NumVal{false, 1, {}};
      for (unsigned i = 0; i < e.exponent(); ++i) acc = mul(acc, b);
      return acc;
    }
  }
  return {};
}

Rational poly_at(const MultiPoly& p, const std::vector<Rational>& point) {
  Rational acc = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < m.exponent(i); ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

// Entry point in catalogue order and the traceless matrices it defines.
struct Point {
  std::vector<Rational> values;
  Num x, y;
};

Point make_point(const std::array<Rational, 10>& v) {
  Point p;
  p.values.assign(v.begin(), v.end());
  p.values.resize(entry_catalogue()->size());
  p.x = {v[0], 0, 0, 0, v[1], 0, 0, 0, -v[0] - v[1]};
  p.y = {v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], -v[2] - v[6]};
  return p;
}

Point random_point(Rng& rng) {
  std::array<Rational, 10> v;
  for (auto& c : v) c = testgen::uniform(rng, -4, 4);
  return make_point(v);
}

void check_against_oracle(const TraceExpr& e, const Point& pt) {
  const NumVal n = num_eval(e, pt.x, pt.y);
  const Value v = eval_expr(e);
  if (n.matrix) {
    const auto& m = std::get<Matrix3>(v);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) CHECK(poly_at(m(r, c), pt.values) == n.m[3 * r + c]);
  } else {
    CHECK(poly_at(std::get<MultiPoly>(v), pt.values) == n.s);
  }
}

}  // namespace

TEST_CASE("generic pair shape") {
  const auto g = make_generic_pair();
  CHECK(g.x.trace().is_zero());
  CHECK(g.y.trace().is_zero());
  CHECK(g.x(0, 1).is_zero());
  CHECK(g.y(2, 2).to_string() == "-y11 - y22");
}

TEST_CASE("v at a fixed point") {
  const Point pt = make_point({1, 0, 0, 1, 0, 1, 0, 0, 0, 0});
  const auto v = parse("tr(x^2*y^2) - tr(x*y*x*y)");
  CHECK(num_eval(v, pt.x, pt.y).s == 1);
  CHECK(poly_at(eval_scalar(v), pt.values) == 1);
}

TEST_CASE("property: evaluation agrees with numeric matrices") {
  Rng rng(0x5eed0101);
  for (int it = 0; it < 120; ++it) {
    const Sort sort = it % 2 == 0 ? Sort::Matrix : Sort::Scalar;
    const auto e = testgen::random_expr(rng, sort, 3);
    if (node_count(e) > 60) continue;
    check_against_oracle(e, random_point(rng));
  }
  for (const auto& inv : invariant_exprs()) {
    if (inv.name == "w3''" || inv.name == "w6" || inv.name == "w1" || inv.name == "w7") continue;
    check_against_oracle(inv.expr, random_point(rng));
  }
}

TEST_CASE("property: tr(AB) = tr(BA)") {
  Rng rng(0x5eed0102);
  for (int it = 0; it < 60; ++it) {
    const auto a = testgen::random_expr(rng, Sort::Matrix, 2);
    const auto b = testgen::random_expr(rng, Sort::Matrix, 2);
    CHECK(eval_scalar(TraceExpr::trace(a * b)) == eval_scalar(TraceExpr::trace(b * a)));
  }
}

TEST_CASE("delta on letters") {
  CHECK(verify_zero(delta(TraceExpr::x())));
  CHECK(eval_matrix(delta(TraceExpr::y())) == eval_matrix(TraceExpr::x()));
  CHECK(verify_zero(delta(TraceExpr::identity())));
  CHECK(eval_scalar(delta(parse("tr(y^2)"))) == eval_scalar(parse("2*tr(x*y)")));
  CHECK(verify_zero(delta(parse("tr(x^3)"))));
}

TEST_CASE("property: delta is a derivation") {
  Rng rng(0x5eed0103);
  for (int it = 0; it < 60; ++it) {
    const auto a = testgen::random_expr(rng, Sort::Matrix, 2);
    const auto b = testgen::random_expr(rng, Sort::Matrix, 2);
    const auto lhs = eval_matrix(delta(a * b));
    const auto rhs = eval_matrix(delta(a) * b + a * delta(b));
    CHECK(lhs == rhs);
    const auto s = testgen::random_expr(rng, Sort::Scalar, 2);
    CHECK(eval_matrix(delta(s * a)) == eval_matrix(delta(s) * a + s * delta(a)));
  }
}

TEST_CASE("property: delta matches the entry derivation") {
  Rng rng(0x5eed0104);
  for (int it = 0; it < 60; ++it) {
    const auto e = testgen::random_expr(rng, it % 2 == 0 ? Sort::Matrix : Sort::Scalar, 3);
    if (node_count(e) > 60) continue;
    const Value before = eval_expr(e);
    const Value after = eval_expr(delta(e));
    if (const auto* m = std::get_if<Matrix3>(&before)) {
      const auto& d = std::get<Matrix3>(after);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(entry_delta((*m)(r, c)) == d(r, c));
    } else {
      CHECK(entry_delta(std::get<MultiPoly>(before)) == std::get<MultiPoly>(after));
    }
  }
}

TEST_CASE("property: delta squared kills y-degree one") {
  Rng rng(0x5eed0105);
  for (int it = 0; it < 40; ++it) {
    const auto a = TraceExpr::power(TraceExpr::x(), static_cast<unsigned>(testgen::uniform(rng, 2, 3)));
    const auto t = TraceExpr::trace(TraceExpr::power(TraceExpr::x(), static_cast<unsigned>(testgen::uniform(rng, 2, 3))));
    const auto e = TraceExpr::product({t, a, TraceExpr::y(), TraceExpr::x()}) +
                   testgen::small_rational(rng) * TraceExpr::product({TraceExpr::y(), a});
    CHECK_FALSE(verify_zero(delta(e)));
    CHECK(verify_zero(delta_power(e, 2)));
  }
}

TEST_CASE("delta_power of tr(y^2)") {
  CHECK(eval_scalar(delta_power(parse("tr(y^2)"), 2)) == eval_scalar(parse("2*tr(x^2)")));
  CHECK(verify_zero(delta_power(parse("tr(y^2)"), 3)));
}

TEST_CASE("Cayley-Hamilton for the traceless generic matrix") {
  CHECK(verify_zero(parse("x^3 - 1/2*tr(x^2)*x - 1/3*tr(x^3)*e")));
  CHECK_FALSE(verify_zero(parse("x^3 - 1/2*tr(x^2)*x")));
}

TEST_CASE("invariant bidegrees") {
  CHECK(eval_scalar(invariant("u")).bidegree() == Bidegree{2, 2});
  CHECK(eval_scalar(invariant("v")).bidegree() == Bidegree{2, 2});
  CHECK(eval_scalar(invariant("w")).bidegree() == Bidegree{3, 3});
  CHECK(eval_scalar(invariant("w6")).bidegree() == Bidegree{6, 6});
  CHECK_THROWS_AS(invariant("nope"), Error);
}

TEST_CASE("w is antisymmetric under swapping x and y") {
  const auto& w = invariant("w");
  CHECK(eval_scalar(swap_letters(w)) == -eval_scalar(w));
}

TEST_CASE("matrix printing") {
  const auto g = make_generic_pair();
  CHECK(Matrix3(entry_catalogue()).to_string() == "0");
  CHECK(g.x.to_string() == "(1,1): x1\n(2,2): x2\n(3,3): -x1 - x2");
}
