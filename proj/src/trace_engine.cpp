#include "tracealg/trace_engine.hpp"

#include <unordered_map>

#include "tracealg/expanded.hpp"

namespace tracealg {

Matrix3::Matrix3(CataloguePtr cat) : cat_(std::move(cat)), m_(9, MultiPoly(cat_)) {}

Matrix3 Matrix3::identity(CataloguePtr cat) {
  return scalar(MultiPoly::constant(std::move(cat), 1));
}

Matrix3 Matrix3::scalar(const MultiPoly& c) {
  Matrix3 m(c.catalogue());
  for (int i = 0; i < 3; ++i) m(i, i) = c;
  return m;
}

MultiPoly Matrix3::trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

bool Matrix3::is_zero() const {
  for (const auto& p : m_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Matrix3& Matrix3::operator+=(const Matrix3& o) {
  for (std::size_t i = 0; i < 9; ++i) m_[i] += o.m_[i];
  return *this;
}

Matrix3& Matrix3::operator-=(const Matrix3& o) {
  for (std::size_t i = 0; i < 9; ++i) m_[i] -= o.m_[i];
  return *this;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 r(a.cat_);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      MultiPoly acc(a.cat_);
      for (int k = 0; k < 3; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

Matrix3 operator*(const MultiPoly& c, const Matrix3& a) {
  Matrix3 r(a.cat_);
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < 9; ++i) {
    if (!a.m_[i].is_zero()) r.m_[i] = c * a.m_[i];
  }
  return r;
}

bool operator==(const Matrix3& a, const Matrix3& b) { return a.m_ == b.m_; }

std::string Matrix3::to_string() const {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto& p = (*this)(i, j);
      if (p.is_zero()) continue;
      if (!out.empty()) out += "\n";
      out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + p.to_string();
    }
  }
  return out.empty() ? "0" : out;
}

GenericPair make_generic_pair() {
  const auto& cat = entry_catalogue();
  auto var = [&](const char* n) { return MultiPoly::variable(cat, n); };
  Matrix3 x(cat);
  x(0, 0) = var("x1");
  x(1, 1) = var("x2");
  x(2, 2) = -(var("x1") + var("x2"));
  Matrix3 y(cat);
  const char* names[3][3] = {{"y11", "y12", "y13"}, {"y21", "y22", "y23"}, {"y31", "y32", nullptr}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (names[i][j]) y(i, j) = var(names[i][j]);
    }
  }
  y(2, 2) = -(var("y11") + var("y22"));
  return {std::move(x), std::move(y)};
}

namespace {

class Evaluator {
 public:
  Evaluator() : pair_(make_generic_pair()) {}

  Value eval(const TraceExpr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Value v = compute(e);
    memo_.emplace(e.id(), v);
    return v;
  }

 private:
  const CataloguePtr& cat() const { return entry_catalogue(); }

  static Matrix3 as_matrix(Value v) { return std::get<Matrix3>(std::move(v)); }
  static MultiPoly as_scalar(Value v) { return std::get<MultiPoly>(std::move(v)); }

  Value compute(const TraceExpr& e) {
    const auto& cs = e.children();
    switch (e.kind()) {
      case ExprKind::LetterX: return pair_.x;
      case ExprKind::LetterY: return pair_.y;
      case ExprKind::Identity: return Matrix3::identity(cat());
      case ExprKind::Constant: return MultiPoly::constant(cat(), e.value());
      case ExprKind::Trace: return as_matrix(eval(cs[0])).trace();
      case ExprKind::Neg: {
        Value v = eval(cs[0]);
        if (auto* p = std::get_if<MultiPoly>(&v)) return -*p;
        return MultiPoly::constant(cat(), -1) * std::get<Matrix3>(v);
      }
      case ExprKind::Sum: {
        Value acc = eval(cs[0]);
        for (std::size_t i = 1; i < cs.size(); ++i) {
          Value t = eval(cs[i]);
          if (auto* p = std::get_if<MultiPoly>(&acc)) {
            *p += std::get<MultiPoly>(t);
          } else {
            std::get<Matrix3>(acc) += std::get<Matrix3>(t);
          }
        }
        return acc;
      }
      case ExprKind::Product: {
        MultiPoly coeff = MultiPoly::constant(cat(), 1);
        std::optional<Matrix3> mat;
        for (const auto& c : cs) {
          Value v = eval(c);
          if (auto* p = std::get_if<MultiPoly>(&v)) {
            coeff = coeff * *p;
            if (coeff.is_zero()) break;
          } else {
            mat = mat ? *mat * std::get<Matrix3>(v) : std::get<Matrix3>(std::move(v));
          }
        }
        if (e.sort() == Sort::Scalar) return coeff;
        if (coeff.is_zero()) return Matrix3(cat());
        return coeff * *mat;
      }
      case ExprKind::Commutator:
      case ExprKind::Anticommutator: {
        Matrix3 a = as_matrix(eval(cs[0]));
        Matrix3 b = as_matrix(eval(cs[1]));
        return e.kind() == ExprKind::Commutator ? a * b - b * a : a * b + b * a;
      }
      case ExprKind::Power: {
        Value base = eval(cs[0]);
        if (auto* p = std::get_if<MultiPoly>(&base)) return p->pow(e.exponent());
        const Matrix3& m = std::get<Matrix3>(base);
        Matrix3 acc = Matrix3::identity(cat());
        for (unsigned i = 0; i < e.exponent(); ++i) acc = i == 0 ? m : acc * m;
        return acc;
      }
    }
    throw Error("unknown expression kind");
  }

  GenericPair pair_;
  std::unordered_map<const void*, Value> memo_;
};

}  // namespace

Value eval_expr(const TraceExpr& e) {
  Evaluator ev;
  return ev.eval(e);
}

Matrix3 eval_matrix(const TraceExpr& e) {
  if (e.sort() != Sort::Matrix) throw SortError("expected a matrix expression");
  return std::get<Matrix3>(eval_expr(e));
}

MultiPoly eval_scalar(const TraceExpr& e) {
  if (e.sort() != Sort::Scalar) throw SortError("expected a scalar expression");
  return std::get<MultiPoly>(eval_expr(e));
}

namespace {

std::vector<TraceExpr> nonzero(std::vector<TraceExpr> xs) {
  std::erase_if(xs, [](const TraceExpr& t) { return t.is_structural_zero(); });
  return xs;
}

TraceExpr sum_or_zero(std::vector<TraceExpr> terms, Sort sort) {
  terms = nonzero(std::move(terms));
  if (terms.empty()) return TraceExpr::zero(sort);
  return TraceExpr::sum(std::move(terms));
}

}  // namespace

TraceExpr delta(const TraceExpr& e) {
  const auto& cs = e.children();
  switch (e.kind()) {
    case ExprKind::LetterX:
    case ExprKind::Identity:
    case ExprKind::Constant: return TraceExpr::zero(e.sort());
    case ExprKind::LetterY: return TraceExpr::x();
    case ExprKind::Trace: {
      TraceExpr d = delta(cs[0]);
      return d.is_structural_zero() ? TraceExpr::zero(Sort::Scalar) : TraceExpr::trace(d);
    }
    case ExprKind::Neg: {
      TraceExpr d = delta(cs[0]);
      return d.is_structural_zero() ? d : TraceExpr::neg(d);
    }
    case ExprKind::Sum: {
      std::vector<TraceExpr> ds;
      for (const auto& c : cs) ds.push_back(delta(c));
      return sum_or_zero(std::move(ds), e.sort());
    }
    case ExprKind::Product: {
      std::vector<TraceExpr> terms;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        TraceExpr d = delta(cs[i]);
        if (d.is_structural_zero()) continue;
        std::vector<TraceExpr> fs = cs;
        fs[i] = d;
        terms.push_back(TraceExpr::product(std::move(fs)));
      }
      return sum_or_zero(std::move(terms), e.sort());
    }
    case ExprKind::Commutator:
    case ExprKind::Anticommutator: {
      auto make = e.kind() == ExprKind::Commutator ? &TraceExpr::commutator : &TraceExpr::anticommutator;
      TraceExpr da = delta(cs[0]);
      TraceExpr db = delta(cs[1]);
      std::vector<TraceExpr> terms;
      if (!da.is_structural_zero()) terms.push_back(make(da, cs[1]));
      if (!db.is_structural_zero()) terms.push_back(make(cs[0], db));
      return sum_or_zero(std::move(terms), e.sort());
    }
    case ExprKind::Power: {
      const TraceExpr& a = cs[0];
      const unsigned n = e.exponent();
      TraceExpr da = delta(a);
      if (n == 0 || da.is_structural_zero()) return TraceExpr::zero(e.sort());
      if (n == 1) return da;
      if (e.sort() == Sort::Scalar) {
        return TraceExpr::product({TraceExpr::constant(n), TraceExpr::power(a, n - 1), da});
      }
      std::vector<TraceExpr> terms;
      for (unsigned k = 0; k < n; ++k) {
        std::vector<TraceExpr> fs;
        if (k > 0) fs.push_back(k == 1 ? a : TraceExpr::power(a, k));
        fs.push_back(da);
        const unsigned rest = n - 1 - k;
        if (rest > 0) fs.push_back(rest == 1 ? a : TraceExpr::power(a, rest));
        terms.push_back(TraceExpr::product(std::move(fs)));
      }
      return TraceExpr::sum(std::move(terms));
    }
  }
  throw Error("unknown expression kind");
}

TraceExpr delta_power(const TraceExpr& e, unsigned n) {
  TraceExpr cur = e;
  for (unsigned i = 0; i < n; ++i) cur = normalize(delta(cur));
  return cur;
}

bool verify_zero(const TraceExpr& e) {
  Value v = eval_expr(e);
  if (auto* p = std::get_if<MultiPoly>(&v)) return p->is_zero();
  return std::get<Matrix3>(v).is_zero();
}

MultiPoly entry_delta(const MultiPoly& p) {
  const auto& cat = *p.catalogue();
  MultiPoly x1 = MultiPoly::variable(p.catalogue(), cat.require("x1"));
  MultiPoly x2 = MultiPoly::variable(p.catalogue(), cat.require("x2"));
  return x1 * p.derivative(cat.require("y11")) + x2 * p.derivative(cat.require("y22"));
}

}  // namespace tracealg
