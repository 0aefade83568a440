#include <doctest.h>

#include "generators.hpp"
#include "tracealg/expanded.hpp"
#include "tracealg/parser.hpp"
#include "tracealg/trace_engine.hpp"

using namespace tracealg;
using testgen::Rng;

namespace {

std::size_t error_offset(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("round trips of fixed expressions") {
  for (const char* s : {"x*y - y*x", "x^3 - 1/2*tr(x^2)*x - 1/3*tr(x^3)*e", "[x,y]^2*x", "tr(x^2*y^2) - tr(x*y*x*y)",
                        "x o y", "-x + 2*y", "tr(x)^2 - 3/4", "[x^2,y]", "(x + y)^2", "x o y*x"}) {
    CHECK(render(parse(s)) == s);
  }
}

TEST_CASE("render of v and the commutator square") {
  const auto v = TraceExpr::trace(TraceExpr::power(TraceExpr::x(), 2) * TraceExpr::power(TraceExpr::y(), 2)) -
                 TraceExpr::trace(TraceExpr::product({TraceExpr::x(), TraceExpr::y(), TraceExpr::x(), TraceExpr::y()}));
  CHECK(parse("tr(x^2*y^2) - tr(x*y*x*y)") == v);
  const auto u32 = TraceExpr::power(TraceExpr::commutator(TraceExpr::x(), TraceExpr::y()), 2) * TraceExpr::x();
  CHECK(parse("[x,y]^2*x") == u32);
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse(" tr ( x ^ 2 ) * y ") == parse("tr(x^2)*y"));
  CHECK(parse("[ x , y ]") == parse("[x,y]"));
}

TEST_CASE("precedence") {
  CHECK(parse("x + y*x^2") == TraceExpr::sum({TraceExpr::x(), TraceExpr::y() * TraceExpr::power(TraceExpr::x(), 2)}));
  CHECK(verify_zero(parse("x o y - (x*y + y*x)")));
  CHECK(verify_zero(parse("[x,y] - (x*y - y*x)")));
}

TEST_CASE("parse errors carry offsets") {
  CHECK(error_offset("tr(tr(x))") == 7);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("   ") == 0);
  CHECK(error_offset("x + z") == 4);
  CHECK(error_offset("(x + y") == 6);
  CHECK(error_offset("x + y)") == 5);
  CHECK(error_offset("x + tr(x)") == 2);
  CHECK(error_offset("[x, y") == 5);
  CHECK(error_offset("x y") == 2);
  CHECK(error_offset("x^") == 2);
  CHECK(error_offset("1/0*x") == 2);
}

TEST_CASE("bivariate polynomials") {
  CHECK(parse_bivariate("(1 + t1)^2").to_string() == "t1^2 + 2*t1 + 1");
  CHECK_THROWS_AS(parse_bivariate("t3"), ParseError);
}

TEST_CASE("property: parse inverts render on random trees") {
  Rng rng(0x5eed0201);
  int checked = 0;
  while (checked < 500) {
    const auto e = testgen::random_expr(rng, checked % 3 == 0 ? Sort::Scalar : Sort::Matrix, 4);
    const std::string text = render(e);
    const auto back = parse(text);
    CHECK_MESSAGE(back == e, text);
    CHECK(render(back) == text);
    ++checked;
  }
}

TEST_CASE("property: normalize preserves the value") {
  Rng rng(0x5eed0202);
  for (int it = 0; it < 60; ++it) {
    const auto e = testgen::random_expr(rng, Sort::Matrix, 3);
    if (node_count(e) > 50) continue;
    const auto n = normalize(e);
    CHECK(eval_matrix(n) == eval_matrix(e));
    CHECK(render(parse(render(n))) == render(n));
  }
}
