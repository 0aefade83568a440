#include "tracealg/expr.hpp"

#include <algorithm>

namespace tracealg {

struct TraceExpr::Node {
  ExprKind kind;
  Sort sort;
  std::optional<Bidegree> bidegree;
  std::vector<TraceExpr> children;
  Rational value;
  unsigned exponent = 0;
};

namespace {

std::optional<Bidegree> add_bidegrees(const std::vector<TraceExpr>& xs) {
  Bidegree total;
  for (const auto& c : xs) {
    auto b = c.bidegree();
    if (!b) return std::nullopt;
    total = total + *b;
  }
  return total;
}

}  // namespace

TraceExpr TraceExpr::x() {
  static const TraceExpr e(std::make_shared<const Node>(Node{ExprKind::LetterX, Sort::Matrix, Bidegree{1, 0}, {}, 0, 0}));
  return e;
}

TraceExpr TraceExpr::y() {
  static const TraceExpr e(std::make_shared<const Node>(Node{ExprKind::LetterY, Sort::Matrix, Bidegree{0, 1}, {}, 0, 0}));
  return e;
}

TraceExpr TraceExpr::identity() {
  static const TraceExpr e(std::make_shared<const Node>(Node{ExprKind::Identity, Sort::Matrix, Bidegree{}, {}, 0, 0}));
  return e;
}

TraceExpr TraceExpr::constant(const Rational& c) {
  if (c < 0) return neg(constant(-c));
  return TraceExpr(std::make_shared<const Node>(Node{ExprKind::Constant, Sort::Scalar, Bidegree{}, {}, c, 0}));
}

TraceExpr TraceExpr::zero(Sort sort) {
  if (sort == Sort::Scalar) return constant(0);
  return product({constant(0), identity()});
}

TraceExpr TraceExpr::trace(const TraceExpr& a) {
  if (a.sort() != Sort::Matrix) throw SortError("trace of a scalar expression");
  return TraceExpr(std::make_shared<const Node>(Node{ExprKind::Trace, Sort::Scalar, a.bidegree(), {a}, 0, 0}));
}

TraceExpr TraceExpr::sum(std::vector<TraceExpr> terms) {
  if (terms.empty()) throw Error("empty sum");
  if (terms.size() == 1) return terms.front();
  const Sort s = terms.front().sort();
  std::optional<Bidegree> b = terms.front().bidegree();
  for (const auto& t : terms) {
    if (t.sort() != s) throw SortError("sum of matrix and scalar expressions");
    if (t.bidegree() != b) b = std::nullopt;
  }
  return TraceExpr(std::make_shared<const Node>(Node{ExprKind::Sum, s, b, std::move(terms), 0, 0}));
}

TraceExpr TraceExpr::neg(const TraceExpr& a) {
  return TraceExpr(std::make_shared<const Node>(Node{ExprKind::Neg, a.sort(), a.bidegree(), {a}, 0, 0}));
}

TraceExpr TraceExpr::product(std::vector<TraceExpr> factors) {
  if (factors.empty()) throw Error("empty product");
  if (factors.size() == 1) return factors.front();
  const bool matrix = std::any_of(factors.begin(), factors.end(),
                                  [](const TraceExpr& f) { return f.sort() == Sort::Matrix; });
  auto b = add_bidegrees(factors);
  return TraceExpr(std::make_shared<const Node>(
      Node{ExprKind::Product, matrix ? Sort::Matrix : Sort::Scalar, b, std::move(factors), 0, 0}));
}

TraceExpr TraceExpr::commutator(const TraceExpr& a, const TraceExpr& b) {
  if (a.sort() != Sort::Matrix || b.sort() != Sort::Matrix) throw SortError("commutator of a scalar expression");
  auto bd = add_bidegrees({a, b});
  return TraceExpr(std::make_shared<const Node>(Node{ExprKind::Commutator, Sort::Matrix, bd, {a, b}, 0, 0}));
}

TraceExpr TraceExpr::anticommutator(const TraceExpr& a, const TraceExpr& b) {
  if (a.sort() != Sort::Matrix || b.sort() != Sort::Matrix) {
    throw SortError("anticommutator of a scalar expression");
  }
  auto bd = add_bidegrees({a, b});
  return TraceExpr(std::make_shared<const Node>(Node{ExprKind::Anticommutator, Sort::Matrix, bd, {a, b}, 0, 0}));
}

TraceExpr TraceExpr::power(const TraceExpr& base, unsigned n) {
  std::optional<Bidegree> b;
  if (auto bb = base.bidegree()) b = *bb * static_cast<int>(n);
  return TraceExpr(std::make_shared<const Node>(Node{ExprKind::Power, base.sort(), b, {base}, 0, n}));
}

ExprKind TraceExpr::kind() const { return node_->kind; }
Sort TraceExpr::sort() const { return node_->sort; }
std::optional<Bidegree> TraceExpr::bidegree() const { return node_->bidegree; }
const std::vector<TraceExpr>& TraceExpr::children() const { return node_->children; }

const Rational& TraceExpr::value() const {
  if (node_->kind != ExprKind::Constant) throw Error("value() of a non-constant node");
  return node_->value;
}

unsigned TraceExpr::exponent() const {
  if (node_->kind != ExprKind::Power) throw Error("exponent() of a non-power node");
  return node_->exponent;
}

bool TraceExpr::is_structural_zero() const {
  if (kind() == ExprKind::Constant) return value() == 0;
  if (kind() == ExprKind::Product) {
    return std::any_of(children().begin(), children().end(),
                       [](const TraceExpr& c) { return c.is_structural_zero(); });
  }
  return false;
}

bool operator==(const TraceExpr& a, const TraceExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& na = *a.node_;
  const auto& nb = *b.node_;
  if (na.kind != nb.kind || na.sort != nb.sort || na.exponent != nb.exponent) return false;
  if (na.kind == ExprKind::Constant && na.value != nb.value) return false;
  return na.children == nb.children;
}

TraceExpr operator+(const TraceExpr& a, const TraceExpr& b) { return TraceExpr::sum({a, b}); }
TraceExpr operator-(const TraceExpr& a, const TraceExpr& b) { return TraceExpr::sum({a, TraceExpr::neg(b)}); }
TraceExpr operator-(const TraceExpr& a) { return TraceExpr::neg(a); }
TraceExpr operator*(const TraceExpr& a, const TraceExpr& b) { return TraceExpr::product({a, b}); }
TraceExpr operator*(const Rational& c, const TraceExpr& a) {
  return TraceExpr::product({TraceExpr::constant(c), a});
}

TraceExpr swap_letters(const TraceExpr& e) {
  switch (e.kind()) {
    case ExprKind::LetterX: return TraceExpr::y();
    case ExprKind::LetterY: return TraceExpr::x();
    case ExprKind::Identity:
    case ExprKind::Constant: return e;
    case ExprKind::Trace: return TraceExpr::trace(swap_letters(e.children()[0]));
    case ExprKind::Neg: return TraceExpr::neg(swap_letters(e.children()[0]));
    case ExprKind::Power: return TraceExpr::power(swap_letters(e.children()[0]), e.exponent());
    case ExprKind::Commutator:
      return TraceExpr::commutator(swap_letters(e.children()[0]), swap_letters(e.children()[1]));
    case ExprKind::Anticommutator:
      return TraceExpr::anticommutator(swap_letters(e.children()[0]), swap_letters(e.children()[1]));
    case ExprKind::Sum:
    case ExprKind::Product: {
      std::vector<TraceExpr> cs;
      cs.reserve(e.children().size());
      for (const auto& c : e.children()) cs.push_back(swap_letters(c));
      return e.kind() == ExprKind::Sum ? TraceExpr::sum(std::move(cs)) : TraceExpr::product(std::move(cs));
    }
  }
  throw Error("unknown expression kind");
}

std::size_t node_count(const TraceExpr& e) {
  std::size_t n = 1;
  for (const auto& c : e.children()) n += node_count(c);
  return n;
}

}  // namespace tracealg
