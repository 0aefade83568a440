#include "tracealg/hilbert.hpp"

#include "tracealg/gl2.hpp"
#include "tracealg/parser.hpp"

namespace tracealg {

BiSeries expand(const RationalSeriesSpec& spec, int n) {
  BiSeries acc = BiSeries::from_poly(spec.numerator, n);
  for (const auto& f : spec.denominator) acc = acc * series_expand_factor(f.x, f.y, n);
  return acc;
}

namespace {

std::map<std::string, RationalSeriesSpec> make_closed_forms() {
  const std::vector<Bidegree> q2{{2, 0}, {1, 1}, {0, 2}};
  const std::vector<Bidegree> q3{{3, 0}, {2, 1}, {1, 2}, {0, 3}};
  std::vector<Bidegree> c0_den = q2;
  c0_den.insert(c0_den.end(), q3.begin(), q3.end());
  c0_den.push_back({2, 2});

  std::vector<Bidegree> c32_den = c0_den;
  c32_den.push_back({1, 0});
  c32_den.push_back({0, 1});

  const std::vector<Bidegree> t32_den{{1, 0}, {1, 0}, {0, 1}, {0, 1}, {2, 0},
                                      {0, 2}, {1, 1}, {1, 1}, {2, 1}, {1, 2}};

  const MultiPoly c_num = parse_bivariate("1 + t1^3*t2^3");
  const MultiPoly p = parse_bivariate("(1 + t1 + t1^2)*(1 + t2 + t2^2)*(1 + t1*t2)");
  const MultiPoly one = parse_bivariate("1");

  return {
      {"C0", {c_num, c0_den}},
      {"C32", {c_num, c32_den}},
      {"T0", {p, c0_den}},
      {"T32", {one, t32_den}},
  };
}

}  // namespace

const std::map<std::string, RationalSeriesSpec>& closed_forms() {
  static const auto forms = make_closed_forms();
  return forms;
}

const RationalSeriesSpec& closed_form(const std::string& name) {
  auto it = closed_forms().find(name);
  if (it == closed_forms().end()) throw Error("unknown algebra '" + name + "'");
  return it->second;
}

BiSeries free_module_series(const std::vector<Bidegree>& generators, const std::vector<Bidegree>& factors, int n) {
  BiSeries acc(n);
  for (const auto& g : generators) acc.add(g.x, g.y, 1);
  for (const auto& f : factors) acc = acc * series_expand_factor(f.x, f.y, n);
  return acc;
}

std::vector<Bidegree> s_generator_bidegrees() {
  return {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}, {2, 2}};
}

std::vector<Bidegree> free_generator_bidegrees() {
  ModuleMultiset g;
  g.add({0, 0});
  g.add({1, 0});
  g.add({2, 0});
  g.add({1, 1});
  g.add({2, 1}, 2);
  g.add({3, 1});
  g.add({2, 2});
  g.add({3, 2});
  g.add({3, 3});
  const MultiPoly ch = character(g);
  std::vector<Bidegree> out;
  for (const auto& [m, c] : ch.terms()) {
    for (unsigned i = 0; i < c.get_num().get_ui(); ++i) {
      out.push_back({static_cast<int>(m.exponent(0)), static_cast<int>(m.exponent(1))});
    }
  }
  return out;
}

}  // namespace tracealg
