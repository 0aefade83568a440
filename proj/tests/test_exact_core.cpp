#include <doctest.h>

#include "generators.hpp"
#include "tracealg/biseries.hpp"
#include "tracealg/parser.hpp"
#include "tracealg/poly.hpp"
#include "tracealg/ratmatrix.hpp"

using namespace tracealg;
using testgen::Rng;

TEST_CASE("rationals stay canonical") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK_THROWS_AS(make_rational(1, 0), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("polynomial printing and bidegree") {
  const auto& cat = entry_catalogue();
  const auto x1 = MultiPoly::variable(cat, "x1");
  const auto x2 = MultiPoly::variable(cat, "x2");
  CHECK((x1 + x2).pow(2).to_string() == "x1^2 + 2*x1*x2 + x2^2");
  CHECK(MultiPoly(cat).to_string() == "0");
  const auto y12 = MultiPoly::variable(cat, "y12");
  CHECK((x1 * y12).bidegree() == Bidegree{1, 1});
  CHECK_FALSE((x1 + y12).bidegree().has_value());
}

TEST_CASE("substitute the u-variable v") {
  // u22 -> x1*x2 + 1 leaves the other variables alone.
  const auto& u = u_catalogue();
  const auto p = MultiPoly::variable(u, "u22") * MultiPoly::variable(u, "u10") + MultiPoly::constant(u, 2);
  const auto img = MultiPoly::variable(u, "u20") + MultiPoly::constant(u, 1);
  const auto r = substitute(p, {{u->require("u22"), img}});
  CHECK(r == (MultiPoly::variable(u, "u20") + MultiPoly::constant(u, 1)) * MultiPoly::variable(u, "u10") +
                 MultiPoly::constant(u, 2));
}

TEST_CASE("catalogue mismatch is an error") {
  const auto a = MultiPoly::variable(entry_catalogue(), 0);
  const auto b = MultiPoly::variable(u_catalogue(), 0);
  CHECK_THROWS_AS(poly_arith(a, b, PolyOp::Add), Error);
}

TEST_CASE("property: polynomial ring axioms") {
  Rng rng(0x5eed0001);
  const auto& cat = entry_catalogue();
  const auto one = MultiPoly::constant(cat, 1);
  for (int it = 0; it < 200; ++it) {
    const auto a = testgen::random_poly(rng, cat, 4, 4, 3);
    const auto b = testgen::random_poly(rng, cat, 4, 4, 3);
    const auto c = testgen::random_poly(rng, cat, 4, 4, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * one == a);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == a * a);
    CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
  }
}

TEST_CASE("nullspace of a small matrix") {
  const RatMatrix m({{1, 2, 3}, {2, 4, 6}});
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(m * v == RatVector{0, 0});
  CHECK(rank(m) == 1);
  CHECK(in_span(ns, RatVector{-5, 1, 1}));
  CHECK_FALSE(in_span(ns, RatVector{1, 0, 0}));
}

TEST_CASE("property: nullspace is the exact kernel") {
  Rng rng(0x5eed0002);
  for (int it = 0; it < 150; ++it) {
    const auto rows = static_cast<std::size_t>(testgen::uniform(rng, 1, 5));
    const auto cols = static_cast<std::size_t>(testgen::uniform(rng, 1, 6));
    RatMatrix m(rows, cols);
    const int zeros = testgen::uniform(rng, 0, 2);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = testgen::uniform(rng, 0, 3) < zeros ? Rational(0) : testgen::small_rational(rng);
    }
    const auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == cols);
    RatVector zero(rows);
    for (const auto& v : ns) CHECK(m * v == zero);
    if (!ns.empty()) CHECK(rank(RatMatrix(ns)) == ns.size());
    RatVector combo(cols);
    for (const auto& v : ns) {
      const Rational k = testgen::small_rational(rng);
      for (std::size_t i = 0; i < cols; ++i) combo[i] += k * v[i];
    }
    CHECK(m * combo == zero);
    if (!ns.empty()) CHECK(in_span(ns, combo));
  }
}

TEST_CASE("row echelon kernel matches nullspace") {
  RowEchelon e(4);
  CHECK(e.add_row({1, 1, 0, 0}));
  CHECK(e.add_row({0, 1, 1, 0}));
  CHECK_FALSE(e.add_row({1, 2, 1, 0}));
  CHECK(e.rank() == 2);
  const RatMatrix m({{1, 1, 0, 0}, {0, 1, 1, 0}});
  CHECK(e.kernel() == nullspace(m));
}

TEST_CASE("series factor expansion") {
  const auto s = series_expand_factor(2, 1, 9);
  CHECK(s.coeff(0, 0) == 1);
  CHECK(s.coeff(2, 1) == 1);
  CHECK(s.coeff(4, 2) == 1);
  CHECK(s.coeff(6, 3) == 1);
  CHECK(s.coeff(1, 0) == 0);
  CHECK(s.coeff(8, 4) == 0);
  CHECK_THROWS_AS(series_expand_factor(0, 0, 3), Error);
}

TEST_CASE("property: factor times its inverse series is one") {
  Rng rng(0x5eed0003);
  for (int it = 0; it < 40; ++it) {
    const int a = testgen::uniform(rng, 0, 3);
    const int b = testgen::uniform(rng, a == 0 ? 1 : 0, 3);
    const int n = testgen::uniform(rng, a + b, 12);
    BiSeries lin = BiSeries::one(n);
    lin.add(a, b, -1);
    CHECK(lin * series_expand_factor(a, b, n) == BiSeries::one(n));
  }
}

TEST_CASE("series from a polynomial truncates") {
  const auto p = parse_bivariate("1 + t1 + t1^2*t2^3");
  const auto s = BiSeries::from_poly(p, 3);
  CHECK(s.coeff(1, 0) == 1);
  CHECK(s.coeff(2, 3) == 0);
  CHECK(s.homogeneous_component(1).to_string() == "t1");
}
