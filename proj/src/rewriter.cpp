#include "tracealg/rewriter.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tracealg/expanded.hpp"
#include "tracealg/hilbert.hpp"
#include "tracealg/invariants.hpp"
#include "tracealg/parser.hpp"
#include "tracealg/relations.hpp"

namespace tracealg {

FreeElement RewriteRule::element() const { return FreeElement::monomial(lead) - tail; }

FreeElement RewriteRule::integral_form() const {
  FreeElement f = element();
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  return f * scale;
}

RewriteRule make_rule(std::string name, const FreeElement& f) {
  if (f.is_zero()) throw Error("rule '" + name + "' is zero");
  const GenMonomial lead = f.lead();
  const Rational c = f.lead_coefficient();
  FreeElement tail = f - FreeElement::monomial(lead, c);
  tail *= Rational(-1) / c;
  return {std::move(name), lead, std::move(tail)};
}

namespace {

// u10..u22 followed by the correction r for tr(xyxy): tr(x^2 y^2) is
// u22 + r, so any r left over means the input was not written in v.
const CataloguePtr& rho_catalogue() {
  static const CataloguePtr cat = [] {
    std::vector<VarCatalogue::Var> vars;
    const auto& u = *u_catalogue();
    for (std::size_t i = 0; i < u.size(); ++i) vars.push_back({u.name(i), u.bidegree(i)});
    vars.push_back({"r", {2, 2}});
    return std::make_shared<const VarCatalogue>(std::move(vars));
  }();
  return cat;
}

MultiPoly rho_trace(const std::string& word) {
  const auto& cat = rho_catalogue();
  static const std::map<std::string, std::string> direct{
      {"xx", "u20"}, {"xy", "u11"}, {"yy", "u02"}, {"xxx", "u30"}, {"xxy", "u21"}, {"xyy", "u12"}, {"yyy", "u03"},
  };
  if (auto it = direct.find(word); it != direct.end()) return MultiPoly::variable(cat, it->second);
  if (word == "xxyy") return MultiPoly::variable(cat, "u22") + MultiPoly::variable(cat, "r");
  if (word == "xyxy") return MultiPoly::variable(cat, "r");
  throw Error("trace factor tr(" + word + ") is not in the S-generator list");
}

}  // namespace

FreeElement rho(const TraceExpr& e) {
  const ExpandedExpr ex = expand(e);
  const auto& cat = rho_catalogue();
  std::map<std::string, MultiPoly> by_word;
  for (const auto& [term, c] : ex.terms()) {
    MultiPoly p = MultiPoly::constant(cat, c);
    for (const auto& t : term.traces) p = p * rho_trace(t);
    auto [it, fresh] = by_word.try_emplace(term.word, cat);
    it->second += p;
  }
  const std::size_t r = cat->require("r");
  FreeElement out;
  for (const auto& [word, p] : by_word) {
    for (const auto& [m, c] : p.terms()) {
      if (m.exponent(r) != 0) throw Error("trace factors do not combine into v = tr(x^2*y^2) - tr(x*y*x*y)");
      out.add_term(GenMonomial{m, word}, c);
    }
  }
  return out;
}

std::vector<RewriteRule> build_basis() {
  std::vector<RewriteRule> rules;
  rules.push_back(make_rule("f1", parse_free("w33*x1 - x1*w33")));
  rules.push_back(make_rule("f2", parse_free("w33*y1 - y1*w33")));
  rules.push_back(make_rule("f3", parse_free("w33^2") - rho(defining_relation_rhs())));

  const HwvFamily& fam = hwv_family("hwv-43");
  const RatVector& alpha = fam.relations.front();
  FreeElement f4 = parse_free("18*x1*w33");
  FreeElement f5 = parse_free("-18*y1*w33");
  for (std::size_t j = 1; j < fam.members.size(); ++j) {
    if (alpha[j] == 0) continue;
    f4 += alpha[j] * rho(fam.members[j]);
    f5 += alpha[j] * rho(swap_letters(fam.members[j]));
  }
  rules.push_back(make_rule("f4", f4));
  rules.push_back(make_rule("f5", f5));

  rules.push_back(make_rule("f6", parse_free("x1^3 - 1/2*u20*x1 - 1/3*u30")));
  rules.push_back(make_rule("f7", parse_free("x1^2*y1 + x1*y1*x1 + y1*x1^2 - u11*x1 - 1/2*u20*y1 - u21")));
  rules.push_back(make_rule("f8", parse_free("x1*y1^2 + y1*x1*y1 + y1^2*x1 - 1/2*u02*x1 - u11*y1 - u12")));
  rules.push_back(make_rule("f9", parse_free("y1^3 - 1/2*u02*y1 - 1/3*u03")));
  rules.push_back(make_rule("f10", parse_free("6*(x1*y1)^2 - 6*y1^2*x1^2 + 3*u02*x1^2 - 6*u11*x1*y1 + 3*u20*y1^2"
                                              " + 2*(-u20*u02 + u11^2 + u22)")));
  rules.push_back(make_rule(
      "f11", parse_free("36*y1^2*x1*y1*x1^2 - 6*u02*x1*y1*x1^2 + 12*u11*((y1*x1)^2 - y1^2*x1^2)"
                        " - 6*u20*y1^2*x1*y1 + 12*u12*(x1*y1*x1 - y1*x1^2) + 12*u21*(y1*x1*y1 - y1^2*x1)"
                        " + (-u20*u02 + 4*u11^2 + 4*u22)*x1*y1 + 2*(-u20*u02 - 2*u11^2 + 4*u22)*y1*x1"
                        " + 2*(u20*u03 - 6*u11*u12 + 3*u02*u21)*x1 + 2*(u02*u30 - 6*u11*u21 + 3*u20*u12)*y1"
                        " + 2*(u20*u11*u02 - u11^3 + u30*u03 - 3*u21*u12 - u22*u11 - 3*w33)")));
  return rules;
}

const std::vector<RewriteRule>& groebner_basis() {
  static const std::vector<RewriteRule> basis = build_basis();
  return basis;
}

FreeElement normal_form(const FreeElement& z, const std::vector<RewriteRule>& rules) {
  FreeElement work = z;
  FreeElement result;
  while (!work.is_zero()) {
    const GenMonomial m = work.lead();
    const Rational c = work.lead_coefficient();
    bool reduced = false;
    for (std::size_t pos = 0; pos <= m.word.size() && !reduced; ++pos) {
      for (const auto& rule : rules) {
        const NCWord& lw = rule.lead.word;
        if (pos + lw.size() > m.word.size() || m.word.compare(pos, lw.size(), lw) != 0) continue;
        if (!rule.lead.u.divides(m.u)) continue;
        const CommMonomial q = m.u.quotient(rule.lead.u);
        work.add_term(m, -c);
        work += c * rule.tail.multiplied(q, m.word.substr(0, pos), m.word.substr(pos + lw.size()));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      result.add_term(m, c);
      work.add_term(m, -c);
    }
  }
  return result;
}

FreeElement normal_form(const FreeElement& z) { return normal_form(z, groebner_basis()); }

namespace {

const std::vector<MultiPoly>& u_images() {
  static const std::vector<MultiPoly> images = [] {
    const auto& cat = entry_catalogue();
    std::vector<MultiPoly> out{MultiPoly::variable(cat, "tX"), MultiPoly::variable(cat, "tY")};
    for (const char* s : {"tr(x^2)", "tr(x*y)", "tr(y^2)", "tr(x^3)", "tr(x^2*y)", "tr(x*y^2)", "tr(y^3)"}) {
      out.push_back(eval_scalar(parse(s)));
    }
    out.push_back(eval_scalar(invariant("v")));
    return out;
  }();
  return images;
}

}  // namespace

Matrix3 pi_eval(const FreeElement& z) {
  const auto& cat = entry_catalogue();
  static const GenericPair pair = make_generic_pair();
  static const Matrix3 w_matrix = Matrix3::scalar(eval_scalar(invariant("w")));
  const auto& images = u_images();

  std::map<NCWord, Matrix3> words;
  auto word_matrix = [&](const NCWord& w) -> const Matrix3& {
    if (auto it = words.find(w); it != words.end()) return it->second;
    Matrix3 m = Matrix3::identity(cat);
    for (char c : w) m = m * (c == 'x' ? pair.x : c == 'y' ? pair.y : w_matrix);
    return words.emplace(w, std::move(m)).first->second;
  };

  std::map<NCWord, MultiPoly> coeffs;
  for (const auto& [m, c] : z.terms()) {
    MultiPoly p = MultiPoly::constant(cat, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (m.u.exponent(i)) p = p * images[i].pow(m.u.exponent(i));
    }
    auto [it, fresh] = coeffs.try_emplace(m.word, cat);
    it->second += p;
  }
  Matrix3 out(cat);
  for (const auto& [w, p] : coeffs) {
    if (!p.is_zero()) out += p * word_matrix(w);
  }
  return out;
}

std::vector<NCWord> normal_words(const std::vector<RewriteRule>& rules, int max_weight) {
  auto normal = [&](const NCWord& w) {
    return std::none_of(rules.begin(), rules.end(),
                        [&](const RewriteRule& r) { return r.lead.u.is_one() && w.find(r.lead.word) != NCWord::npos; });
  };
  std::vector<NCWord> out;
  if (!normal("")) return out;
  std::vector<NCWord> frontier{""};
  while (!frontier.empty()) {
    std::vector<NCWord> next;
    for (const auto& w : frontier) {
      out.push_back(w);
      for (char c : {'x', 'y', 'w'}) {
        NCWord nw = w + c;
        if (word_weight(nw) <= max_weight && normal(nw)) next.push_back(std::move(nw));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const NCWord& a, const NCWord& b) { return compare_words(a, b) < 0; });
  return out;
}

std::vector<NCWord> normal_words() {
  // Every normal word of weight above 6 has a normal prefix of weight in
  // 7..12, so none there means none at all.
  auto words = normal_words(groebner_basis(), 12);
  if (std::any_of(words.begin(), words.end(), [](const NCWord& w) { return word_weight(w) > 6; })) {
    throw Error("the set of normal words is infinite");
  }
  return words;
}

BiSeries normal_monomial_census(const std::vector<RewriteRule>& rules, int n) {
  for (const auto& r : rules) {
    if (!r.lead.u.is_one()) throw Error("census requires leads without u-part");
  }
  std::vector<Bidegree> gens;
  for (const auto& w : normal_words(rules, n)) {
    auto b = word_bidegree(w);
    if (b.total() <= n) gens.push_back(b);
  }
  return free_module_series(gens, s_generator_bidegrees(), n);
}

GroebnerReport verify_groebner(const std::vector<RewriteRule>& rules, int n) {
  GroebnerReport rep;
  for (const auto& r : rules) {
    if (!pi_eval(r.element()).is_zero()) rep.nonzero_images.push_back(r.name);
  }
  rep.details.push_back(rep.nonzero_images.empty() ? "all rule images vanish"
                                                   : std::to_string(rep.nonzero_images.size()) + " rule images are nonzero");
  for (const auto& name : rep.nonzero_images) rep.details.push_back("nonzero image: " + name);

  rep.normal_word_count = normal_words(rules, n).size();
  rep.details.push_back(std::to_string(rep.normal_word_count) + " normal words of weight <= " + std::to_string(n));

  const BiSeries census = normal_monomial_census(rules, n);
  const BiSeries series = expand(closed_form("T32"), n);
  rep.census_ok = true;
  for (int d = 0; d <= n && rep.census_ok; ++d) {
    for (int i = d; i >= 0; --i) {
      if (census.coeff(i, d - i) != series.coeff(i, d - i)) {
        rep.census_ok = false;
        rep.first_mismatch = Bidegree{i, d - i};
        rep.census_count = census.coeff(i, d - i);
        rep.series_count = series.coeff(i, d - i);
        rep.details.push_back("census mismatch at bidegree " + to_string(*rep.first_mismatch) + ": " +
                              to_string(rep.census_count) + " normal monomials, series coefficient " +
                              to_string(rep.series_count));
        break;
      }
    }
  }
  if (rep.census_ok) rep.details.push_back("census matches H(T32) up to total degree " + std::to_string(n));
  rep.pass = rep.nonzero_images.empty() && rep.census_ok;
  return rep;
}

GroebnerReport verify_groebner(int n) { return verify_groebner(groebner_basis(), n); }

std::map<NCWord, MultiPoly> decompose_in_free_basis(const TraceExpr& e) {
  const FreeElement nf = normal_form(rho(e));
  std::map<NCWord, MultiPoly> out;
  for (const auto& [m, c] : nf.terms()) {
    auto [it, fresh] = out.try_emplace(m.word, u_catalogue());
    it->second.add_term(m.u, c);
  }
  return out;
}

FreeElement assemble(const std::map<NCWord, MultiPoly>& parts) {
  FreeElement out;
  for (const auto& [w, p] : parts) {
    for (const auto& [m, c] : p.terms()) out.add_term(GenMonomial{m, w}, c);
  }
  return out;
}

}  // namespace tracealg
