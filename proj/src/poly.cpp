#include "tracealg/poly.hpp"

#include <algorithm>
#include <set>

namespace tracealg {

std::string to_string(const Bidegree& b) {
  return "(" + std::to_string(b.x) + "," + std::to_string(b.y) + ")";
}

VarCatalogue::VarCatalogue(std::vector<Var> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) throw Error("catalogue exceeds the variable limit");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!seen.insert(v.name).second) throw Error("duplicate variable name '" + v.name + "'");
  }
}

std::optional<std::size_t> VarCatalogue::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t VarCatalogue::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error("unknown variable '" + std::string(name) + "'");
}

const CataloguePtr& entry_catalogue() {
  static const CataloguePtr cat = std::make_shared<const VarCatalogue>(std::vector<VarCatalogue::Var>{
      {"x1", {1, 0}},  {"x2", {1, 0}},  {"y11", {0, 1}}, {"y12", {0, 1}},
      {"y13", {0, 1}}, {"y21", {0, 1}}, {"y22", {0, 1}}, {"y23", {0, 1}},
      {"y31", {0, 1}}, {"y32", {0, 1}}, {"tX", {1, 0}},  {"tY", {0, 1}},
  });
  return cat;
}

const CataloguePtr& u_catalogue() {
  static const CataloguePtr cat = std::make_shared<const VarCatalogue>(std::vector<VarCatalogue::Var>{
      {"u10", {1, 0}}, {"u01", {0, 1}}, {"u20", {2, 0}}, {"u11", {1, 1}}, {"u02", {0, 2}},
      {"u30", {3, 0}}, {"u21", {2, 1}}, {"u12", {1, 2}}, {"u03", {0, 3}}, {"u22", {2, 2}},
  });
  return cat;
}

const CataloguePtr& series_catalogue() {
  static const CataloguePtr cat = std::make_shared<const VarCatalogue>(
      std::vector<VarCatalogue::Var>{{"t1", {1, 0}}, {"t2", {0, 1}}});
  return cat;
}

// ---------------------------------------------------------------------------

CommMonomial CommMonomial::variable(std::size_t index, unsigned power) {
  CommMonomial m;
  m.set_exponent(index, power);
  return m;
}

void CommMonomial::set_exponent(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw Error("variable index out of range");
  if (e > 255) throw Error("exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
}

Bidegree CommMonomial::bidegree(const VarCatalogue& cat) const {
  Bidegree b;
  for (std::size_t i = 0; i < cat.size(); ++i) b = b + cat.bidegree(i) * exps_[i];
  return b;
}

CommMonomial CommMonomial::operator*(const CommMonomial& o) const {
  CommMonomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned{exps_[i]} + o.exps_[i];
    if (e > 255) throw Error("exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
  return r;
}

bool CommMonomial::divides(const CommMonomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

CommMonomial CommMonomial::quotient(const CommMonomial& d) const {
  if (!d.divides(*this)) throw Error("monomial quotient is not exact");
  CommMonomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - d.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - d.degree_);
  return r;
}

std::strong_ordering CommMonomial::operator<=>(const CommMonomial& o) const {
  if (auto c = degree_ <=> o.degree_; c != 0) return c;
  return exps_ <=> o.exps_;
}

std::string CommMonomial::to_string(const VarCatalogue& cat) const {
  std::string out;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += cat.name(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

namespace {

bool same_catalogue(const CataloguePtr& a, const CataloguePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->size() != b->size()) return false;
  for (std::size_t i = 0; i < a->size(); ++i) {
    if (a->name(i) != b->name(i)) return false;
  }
  return true;
}

}  // namespace

MultiPoly::MultiPoly(CataloguePtr cat) : cat_(std::move(cat)) {
  if (!cat_) throw Error("polynomial without a catalogue");
}

MultiPoly MultiPoly::constant(CataloguePtr cat, const Rational& c) {
  MultiPoly p(std::move(cat));
  p.add_term(CommMonomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(CataloguePtr cat, std::size_t index) {
  if (index >= cat->size()) throw Error("variable index out of range");
  MultiPoly p(std::move(cat));
  p.add_term(CommMonomial::variable(index), 1);
  return p;
}

MultiPoly MultiPoly::variable(CataloguePtr cat, std::string_view name) {
  std::size_t i = cat->require(name);
  return variable(std::move(cat), i);
}

MultiPoly MultiPoly::monomial(CataloguePtr cat, const CommMonomial& m, const Rational& c) {
  MultiPoly p(std::move(cat));
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::coefficient(const CommMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Bidegree> MultiPoly::bidegree() const {
  std::optional<Bidegree> b;
  for (const auto& [m, c] : terms_) {
    Bidegree mb = m.bidegree(*cat_);
    if (b && *b != mb) return std::nullopt;
    b = mb;
  }
  return b;
}

void MultiPoly::add_term(const CommMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (!same_catalogue(cat_, o.cat_)) throw Error("polynomial catalogue mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  MultiPoly r(a.cat_);
  if (a.is_zero() || b.is_zero()) return r;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = r.terms_.try_emplace(ma * mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_catalogue(a.cat_, b.cat_) && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(cat_, 1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(cat_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(var);
    if (e == 0) continue;
    CommMonomial d = m;
    d.set_exponent(var, e - 1);
    r.add_term(d, c * e);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += tracealg::to_string(mag);
    } else {
      if (mag != 1) out += tracealg::to_string(mag) + "*";
      out += m.to_string(*cat_);
    }
  }
  return out;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  throw Error("unknown polynomial operation");
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::size_t, MultiPoly>& bindings) {
  CataloguePtr target = p.catalogue();
  if (!bindings.empty()) {
    target = bindings.begin()->second.catalogue();
    for (const auto& [var, image] : bindings) {
      if (var >= p.catalogue()->size()) throw Error("substitution binds an unknown variable");
      if (!same_catalogue(image.catalogue(), target)) throw Error("substitution target catalogue mismatch");
    }
  }
  // Unbound variables must map to themselves, so they have to exist in the target.
  std::vector<std::optional<MultiPoly>> images(p.catalogue()->size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto it = bindings.find(i);
    if (it != bindings.end()) {
      images[i] = it->second;
    } else {
      bool used = std::any_of(p.terms().begin(), p.terms().end(),
                              [&](const auto& kv) { return kv.first.exponent(i) > 0; });
      if (!used) continue;
      if (!same_catalogue(p.catalogue(), target)) throw Error("substitution target catalogue mismatch");
      images[i] = MultiPoly::variable(target, i);
    }
  }
  // Cache powers per variable.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[i]);
    return cache[e];
  };
  MultiPoly result(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (unsigned e = m.exponent(i); e > 0) term = term * power_of(i, e);
    }
    result += term;
  }
  return result;
}

}  // namespace tracealg
