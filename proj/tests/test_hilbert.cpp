#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "tracealg/expanded.hpp"
#include "tracealg/gl2.hpp"
#include "tracealg/hilbert.hpp"
#include "tracealg/parser.hpp"
#include "tracealg/ratmatrix.hpp"
#include "tracealg/trace_engine.hpp"

using namespace tracealg;

namespace {

// Dimension of a bihomogeneous component, computed as the rank of the
// evaluated spanning set: products of traces of words times a word.
struct SpanOracle {
  bool traceless;
  bool scalars_only;
  Matrix3 x, y;

  explicit SpanOracle(bool traceless_, bool scalars_only_)
      : traceless(traceless_), scalars_only(scalars_only_), x(entry_catalogue()), y(entry_catalogue()) {
    const auto g = make_generic_pair();
    x = g.x;
    y = g.y;
    if (!traceless) {
      const auto& cat = entry_catalogue();
      x += Matrix3::scalar(MultiPoly::variable(cat, "tX") * make_rational(1, 3));
      y += Matrix3::scalar(MultiPoly::variable(cat, "tY") * make_rational(1, 3));
    }
  }

  Matrix3 word_matrix(const std::string& w) const {
    Matrix3 m = Matrix3::identity(entry_catalogue());
    for (char c : w) m = m * (c == 'x' ? x : y);
    return m;
  }

  static std::vector<std::string> words(int a, int b) {
    std::vector<std::string> out;
    std::string w(static_cast<std::size_t>(a), 'x');
    w.append(static_cast<std::size_t>(b), 'y');
    std::sort(w.begin(), w.end());
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
  }

  std::vector<std::string> necklaces(int a, int b) const {
    if (traceless && a + b < 2) return {};
    std::set<std::string> s;
    for (const auto& w : words(a, b)) s.insert(canonical_cyclic(w));
    return {s.begin(), s.end()};
  }

  // Nondecreasing sequences of necklaces with total bidegree (a, b).
  void trace_monomials(int a, int b, const std::vector<std::pair<Bidegree, std::string>>& pool, std::size_t from,
                       std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) const {
    if (a == 0 && b == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      const auto& d = pool[i].first;
      if (d.x > a || d.y > b) continue;
      cur.push_back(i);
      trace_monomials(a - d.x, b - d.y, pool, i, cur, out);
      cur.pop_back();
    }
  }

  std::size_t dimension(int a, int b) const {
    std::vector<std::pair<Bidegree, std::string>> pool;
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j)
        if (i + j > 0)
          for (const auto& n : necklaces(i, j)) pool.push_back({{i, j}, n});
    std::vector<MultiPoly> traces;
    for (const auto& [d, n] : pool) traces.push_back(word_matrix(n).trace());

    std::vector<Matrix3> span;
    for (int i = 0; i <= a; ++i) {
      for (int j = 0; j <= b; ++j) {
        if (scalars_only && i + j > 0) continue;
        std::vector<std::vector<std::size_t>> monos;
        std::vector<std::size_t> cur;
        trace_monomials(a - i, b - j, pool, 0, cur, monos);
        for (const auto& w : words(i, j)) {
          const Matrix3 wm = word_matrix(w);
          for (const auto& mono : monos) {
            MultiPoly c = MultiPoly::constant(entry_catalogue(), 1);
            for (auto k : mono) c = c * traces[k];
            span.push_back(c * wm);
          }
        }
      }
    }
    std::map<std::pair<int, CommMonomial>, std::size_t> cols;
    for (const auto& m : span)
      for (int e = 0; e < 9; ++e)
        for (const auto& [mono, c] : m(e / 3, e % 3).terms()) cols.try_emplace({e, mono}, cols.size());
    if (cols.empty()) return 0;
    RowEchelon ech(cols.size());
    for (const auto& m : span) {
      RatVector row(cols.size());
      for (int e = 0; e < 9; ++e)
        for (const auto& [mono, c] : m(e / 3, e % 3).terms()) row[cols.at({e, mono})] = c;
      ech.add_row(std::move(row));
    }
    return ech.rank();
  }
};

void check_dimensions(const std::string& algebra, bool traceless, bool scalars_only, int cap) {
  const SpanOracle oracle(traceless, scalars_only);
  const BiSeries s = expand(closed_form(algebra), cap);
  for (int k = 0; k <= cap; ++k) {
    for (int a = k; 2 * a >= k; --a) {
      const auto dim = oracle.dimension(a, k - a);
      CHECK_MESSAGE(s.coeff(a, k - a) == static_cast<long>(dim), algebra << " at (" << a << "," << k - a << ")");
      CHECK(s.coeff(k - a, a) == s.coeff(a, k - a));
    }
  }
}

}  // namespace

TEST_CASE("hand-expanded coefficients") {
  CHECK(expand(closed_form("T32"), 2).coeff(1, 1) == 6);
  CHECK(expand(closed_form("T0"), 1).to_poly() == parse_bivariate("1 + t1 + t2"));
  CHECK(expand(closed_form("C0"), 3).to_poly() == parse_bivariate("1 + t1^2 + t1*t2 + t2^2 + t1^3 + t1^2*t2 + t1*t2^2 + t2^3"));
  CHECK_THROWS_AS(closed_form("C33"), Error);
}

TEST_CASE("closed forms agree with spanning-set ranks") {
  check_dimensions("C0", true, true, 5);
  check_dimensions("T0", true, false, 4);
  check_dimensions("C32", false, true, 5);
  check_dimensions("T32", false, false, 4);
}

TEST_CASE("homogeneous components of the pure trace series") {
  const BiSeries s = expand(closed_form("C0"), 7);
  const std::vector<std::string> expected{
      "W(0,0)",
      "0",
      "W(2,0)",
      "W(3,0)",
      "W(4,0) + 2W(2,2)",
      "W(5,0) + W(4,1) + W(3,2)",
      "2W(6,0) + 3W(4,2) + W(3,3)",
      "W(7,0) + W(6,1) + 3W(5,2) + W(4,3)",
  };
  for (int k = 0; k <= 7; ++k) CHECK(schur_decompose(s.homogeneous_component(k)).to_string() == expected[k]);
}

TEST_CASE("free module structures") {
  const auto s_gens = s_generator_bidegrees();
  REQUIRE(s_gens.size() == 10);
  CHECK(free_module_series({{0, 0}, {3, 3}}, s_gens, 12) == expand(closed_form("C32"), 12));
  const auto g = free_generator_bidegrees();
  CHECK(g.size() == 18);
  CHECK(free_module_series(g, s_gens, 12) == expand(closed_form("T32"), 12));
  auto short_g = g;
  short_g.pop_back();
  CHECK_FALSE(free_module_series(short_g, s_gens, 12) == expand(closed_form("T32"), 12));
}

TEST_CASE("property: series are symmetric in t1, t2") {
  for (const auto& [name, spec] : closed_forms()) {
    const BiSeries s = expand(spec, 10);
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; i + j <= 10; ++j) CHECK(s.coeff(i, j) == s.coeff(j, i));
  }
}
