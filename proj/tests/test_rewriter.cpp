#include <doctest.h>

#include <functional>

#include "generators.hpp"
#include "tracealg/hilbert.hpp"
#include "tracealg/parser.hpp"
#include "tracealg/rewriter.hpp"

using namespace tracealg;
using testgen::Rng;

namespace {

GenMonomial word(const std::string& w) { return {{}, w}; }

bool is_normal(const FreeElement& f, const std::vector<RewriteRule>& rules) {
  for (const auto& [m, c] : f.terms())
    for (const auto& r : rules)
      if (divides(r.lead, m)) return false;
  return true;
}

// Every word of weight <= n avoiding all leads, by exhaustive enumeration.
std::vector<NCWord> brute_normal_words(const std::vector<RewriteRule>& rules, int n) {
  std::vector<NCWord> out;
  std::function<void(const NCWord&)> go = [&](const NCWord& w) {
    for (const auto& r : rules)
      if (w.find(r.lead.word) != NCWord::npos) return;
    out.push_back(w);
    for (char c : {'x', 'y', 'w'}) {
      const NCWord next = w + c;
      if (word_weight(next) <= n) go(next);
    }
  };
  go("");
  std::sort(out.begin(), out.end(), [](const NCWord& a, const NCWord& b) { return compare_words(a, b) < 0; });
  return out;
}

}  // namespace

TEST_CASE("word order") {
  CHECK(compare_words("x", "y") > 0);
  CHECK(compare_words("xy", "yx") > 0);
  CHECK(compare_words("yy", "x") > 0);
  CHECK(compare_words("w", "xxxxx") > 0);
  CHECK(compare_words("xxxxxx", "w") > 0);
  CHECK(compare_words("wx", "xw") > 0);
  CHECK(compare_words("", "") == 0);
  const GenMonomial a{CommMonomial::variable(0), "x"};
  const GenMonomial b{CommMonomial::variable(1), "x"};
  CHECK(compare(a, b) > 0);
  CHECK(compare(word("y"), a) < 0);
}

TEST_CASE("property: the order is total and multiplicative") {
  Rng rng(0x5eed0301);
  for (int it = 0; it < 500; ++it) {
    const NCWord a = testgen::random_word(rng, 6, true), b = testgen::random_word(rng, 6, true);
    const NCWord c = testgen::random_word(rng, 3, true), d = testgen::random_word(rng, 3, true);
    const auto ab = compare_words(a, b);
    CHECK((ab == 0) == (a == b));
    CHECK((compare_words(b, a) < 0) == (ab > 0));
    CHECK(compare_words(c + a + d, c + b + d) == ab);
    if (!c.empty()) CHECK(compare_words(a + c, a) > 0);
  }
}

TEST_CASE("free algebra arithmetic and printing") {
  const auto f = parse_free("x1^3 - 1/2*u20*x1 - 1/3*u30");
  CHECK(f.to_string() == "x1^3 - 1/2*u20*x1 - 1/3*u30");
  CHECK(f.lead() == word("xxx"));
  CHECK(parse_free("x1*y1") != parse_free("y1*x1"));
  CHECK(parse_free("u10*u01") == parse_free("u01*u10"));
  CHECK(parse_free("(x1 + y1)^2").size() == 4);
  CHECK_THROWS_AS(parse_free("x1 + z"), ParseError);
  CHECK_THROWS_AS(FreeElement().lead(), Error);
  CHECK(word_to_string("yyxyxxx") == "y1^2*x1*y1*x1^3");
}

TEST_CASE("divisibility uses the leftmost occurrence") {
  const auto d = divides(word("xy"), {CommMonomial::variable(2), "yxyxy"});
  REQUIRE(d.has_value());
  CHECK(d->h1 == "y");
  CHECK(d->h2 == "xy");
  CHECK(d->c == CommMonomial::variable(2));
  CHECK_FALSE(divides({CommMonomial::variable(1), "x"}, word("xx")).has_value());
}

TEST_CASE("rho of trace products") {
  CHECK(rho(parse("tr(x^2)*x")) == parse_free("u20*x1"));
  CHECK_THROWS_AS(rho(parse("tr(x*y*x*y)")), Error);
  CHECK(rho(parse("tr(x^2*y^2) - tr(x*y*x*y)")) == parse_free("u22"));
  CHECK(rho(parse("tr(y*x*y)*e")) == parse_free("u12"));
  CHECK_THROWS_AS(rho(parse("tr(x^4)")), Error);
  CHECK_THROWS_AS(rho(parse("tr(x^2*y^2)")), Error);
}

TEST_CASE("the eleven rules") {
  const auto& rules = groebner_basis();
  REQUIRE(rules.size() == 11);
  for (const auto& r : rules) {
    CHECK(r.element().lead() == r.lead);
    CHECK(r.element().lead_coefficient() == 1);
    CHECK(r.lead.u.is_one());
    CHECK(pi_eval(r.element()).is_zero());
    CHECK(make_rule(r.name, r.integral_form()).element() == r.element());
  }
  CHECK(rules[5].element().to_string() == "x1^3 - 1/2*u20*x1 - 1/3*u30");
  CHECK_THROWS_AS(make_rule("zero", FreeElement()), Error);
}

TEST_CASE("normal words") {
  const std::vector<std::string> expected{
      "1",
      "y1",
      "x1",
      "y1^2",
      "y1*x1",
      "x1*y1",
      "x1^2",
      "y1^2*x1",
      "y1*x1*y1",
      "y1*x1^2",
      "x1*y1*x1",
      "y1^2*x1*y1",
      "y1^2*x1^2",
      "y1*x1*y1*x1",
      "x1*y1*x1^2",
      "y1^2*x1*y1*x1",
      "y1*x1*y1*x1^2",
      "w33",
  };
  std::vector<std::string> got;
  for (const auto& w : normal_words()) got.push_back(word_to_string(w));
  CHECK(got == expected);
}

TEST_CASE("census by explicit enumeration") {
  const auto& rules = groebner_basis();
  CHECK(brute_normal_words(rules, 12) == normal_words(rules, 12));

  // Count u-monomials by bidegree directly and convolve with the words.
  const int cap = 8;
  BiSeries u_count(cap);
  const auto& cat = *u_catalogue();
  std::function<void(std::size_t, Bidegree)> go = [&](std::size_t var, Bidegree b) {
    if (var == cat.size()) {
      u_count.add(b.x, b.y, 1);
      return;
    }
    for (Bidegree c = b; c.total() <= cap; c = c + cat.bidegree(var)) go(var + 1, c);
  };
  go(0, {});
  BiSeries census(cap);
  for (const auto& w : normal_words(rules, cap)) {
    const auto b = word_bidegree(w);
    for (int i = 0; i + b.x <= cap; ++i)
      for (int j = 0; i + j + b.total() <= cap; ++j) census.add(i + b.x, j + b.y, u_count.coeff(i, j));
  }
  CHECK(census == normal_monomial_census(rules, cap));
  CHECK(census == expand(closed_form("T32"), cap));
}

TEST_CASE("normal forms") {
  CHECK(normal_form(parse_free("x1^3")).to_string() == "1/2*u20*x1 + 1/3*u30");
  CHECK(normal_form(parse_free("w33*x1 - x1*w33")).is_zero());
  const auto nf = decompose_in_free_basis(parse("x^3"));
  REQUIRE(nf.size() == 2);
  CHECK(nf.at("x").to_string() == "1/2*u20");
  CHECK(nf.at("").to_string() == "1/3*u30");
}

TEST_CASE("w33*x1 reduces to normal monomials with the same image") {
  const auto z = parse_free("w33*x1");
  const auto n = normal_form(z);
  CHECK(is_normal(n, groebner_basis()));
  CHECK(n != z);
  CHECK(pi_eval(n) == pi_eval(z));
}

TEST_CASE("[x,y]*x^2 in the free basis") {
  const auto e = parse("[x,y]*x^2");
  const auto parts = decompose_in_free_basis(e);
  CHECK(parts.count("xyxx") == 1);
  const auto back = assemble(parts);
  CHECK(is_normal(back, groebner_basis()));
  CHECK(pi_eval(back) == eval_matrix(e));
}

TEST_CASE("property: normal form is idempotent and normal") {
  Rng rng(0x5eed0302);
  for (int it = 0; it < 100; ++it) {
    const auto z = testgen::random_free(rng, 4, 9);
    const auto n = normal_form(z);
    CHECK(is_normal(n, groebner_basis()));
    CHECK(normal_form(n) == n);
    CHECK(normal_form(z + z) == n + n);
  }
}

TEST_CASE("property: normal form preserves the matrix image") {
  Rng rng(0x5eed0303);
  for (int it = 0; it < 100; ++it) {
    const auto z = testgen::random_free(rng, 4, 8);
    CHECK(pi_eval(normal_form(z)) == pi_eval(z));
  }
}

TEST_CASE("property: the ideal maps to zero") {
  Rng rng(0x5eed0304);
  const auto& rules = groebner_basis();
  for (int it = 0; it < 30; ++it) {
    const auto& r = rules[static_cast<std::size_t>(testgen::uniform(rng, 0, 10))];
    const auto a = testgen::random_free(rng, 2, 3);
    const auto b = testgen::random_free(rng, 2, 3);
    const auto z = a * r.element() * b;
    CHECK(pi_eval(z).is_zero());
    CHECK(normal_form(z).is_zero());
  }
}

TEST_CASE("groebner verification and its mutations") {
  const auto ok = verify_groebner(12);
  CHECK(ok.pass);
  CHECK(ok.normal_word_count == 18);

  auto without = groebner_basis();
  without.pop_back();
  const auto r1 = verify_groebner(without, 12);
  CHECK_FALSE(r1.pass);
  CHECK(r1.nonzero_images.empty());
  REQUIRE(r1.first_mismatch.has_value());
  CHECK(*r1.first_mismatch == Bidegree{3, 3});

  auto bogus = groebner_basis();
  bogus.push_back(make_rule("bogus", parse_free("x1*y1*x1")));
  const auto r2 = verify_groebner(bogus, 12);
  CHECK_FALSE(r2.pass);
  CHECK(r2.nonzero_images == std::vector<std::string>{"bogus"});
  REQUIRE(r2.first_mismatch.has_value());
  CHECK(*r2.first_mismatch == Bidegree{2, 1});
}
