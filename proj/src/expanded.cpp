#include "tracealg/expanded.hpp"

#include <algorithm>

namespace tracealg {

Bidegree TraceTerm::bidegree() const {
  Bidegree b;
  auto count = [&](const std::string& w) {
    for (char ch : w) (ch == 'x' ? b.x : b.y) += 1;
  };
  for (const auto& t : traces) count(t);
  count(word);
  return b;
}

void ExpandedExpr::add(const TraceTerm& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExpandedExpr& ExpandedExpr::operator+=(const ExpandedExpr& o) {
  if (o.sort_ != sort_) throw SortError("sum of matrix and scalar expressions");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

ExpandedExpr ExpandedExpr::operator*(const ExpandedExpr& o) const {
  ExpandedExpr r(sort_ == Sort::Matrix || o.sort_ == Sort::Matrix ? Sort::Matrix : Sort::Scalar);
  for (const auto& [ta, ca] : terms_) {
    for (const auto& [tb, cb] : o.terms_) {
      TraceTerm t;
      t.traces.reserve(ta.traces.size() + tb.traces.size());
      std::merge(ta.traces.begin(), ta.traces.end(), tb.traces.begin(), tb.traces.end(),
                 std::back_inserter(t.traces));
      t.word = ta.word + tb.word;
      r.add(t, ca * cb);
    }
  }
  return r;
}

ExpandedExpr ExpandedExpr::scaled(const Rational& c) const {
  ExpandedExpr r(sort_);
  if (c == 0) return r;
  for (const auto& [t, v] : terms_) r.terms_.emplace(t, v * c);
  return r;
}

std::string canonical_cyclic(const std::string& word) {
  std::string best = word;
  for (std::size_t k = 1; k < word.size(); ++k) {
    std::string rot = word.substr(k) + word.substr(0, k);
    if (rot < best) best = std::move(rot);
  }
  return best;
}

namespace {

ExpandedExpr unit(Sort sort) {
  ExpandedExpr r(sort);
  r.add(TraceTerm{}, 1);
  return r;
}

ExpandedExpr letter(char ch) {
  ExpandedExpr r(Sort::Matrix);
  r.add(TraceTerm{{}, std::string(1, ch)}, 1);
  return r;
}

ExpandedExpr take_trace(const ExpandedExpr& a) {
  ExpandedExpr r(Sort::Scalar);
  for (const auto& [t, c] : a.terms()) {
    if (t.word.empty()) {
      r.add(TraceTerm{t.traces, ""}, c * 3);
    } else if (t.word.size() > 1) {
      TraceTerm nt{t.traces, ""};
      auto key = canonical_cyclic(t.word);
      nt.traces.insert(std::upper_bound(nt.traces.begin(), nt.traces.end(), key), key);
      r.add(nt, c);
    }
    // tr(x) = tr(y) = 0
  }
  return r;
}

}  // namespace

ExpandedExpr expand(const TraceExpr& e) {
  switch (e.kind()) {
    case ExprKind::LetterX: return letter('x');
    case ExprKind::LetterY: return letter('y');
    case ExprKind::Identity: return unit(Sort::Matrix);
    case ExprKind::Constant: return unit(Sort::Scalar).scaled(e.value());
    case ExprKind::Trace: return take_trace(expand(e.children()[0]));
    case ExprKind::Neg: return expand(e.children()[0]).scaled(-1);
    case ExprKind::Sum: {
      ExpandedExpr r(e.sort());
      for (const auto& c : e.children()) r += expand(c);
      return r;
    }
    case ExprKind::Product: {
      ExpandedExpr r = unit(Sort::Scalar);
      for (const auto& c : e.children()) r = r * expand(c);
      return r;
    }
    case ExprKind::Commutator:
    case ExprKind::Anticommutator: {
      ExpandedExpr a = expand(e.children()[0]);
      ExpandedExpr b = expand(e.children()[1]);
      ExpandedExpr r = a * b;
      r += (b * a).scaled(e.kind() == ExprKind::Commutator ? -1 : 1);
      return r;
    }
    case ExprKind::Power: {
      ExpandedExpr base = expand(e.children()[0]);
      ExpandedExpr r = unit(e.sort());
      for (unsigned i = 0; i < e.exponent(); ++i) r = r * base;
      return r;
    }
  }
  throw Error("unknown expression kind");
}

TraceExpr word_expr(const std::string& word) {
  if (word.empty()) return TraceExpr::identity();
  std::vector<TraceExpr> factors;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    TraceExpr l = word[i] == 'x' ? TraceExpr::x() : TraceExpr::y();
    factors.push_back(j - i == 1 ? l : TraceExpr::power(l, static_cast<unsigned>(j - i)));
    i = j;
  }
  return TraceExpr::product(std::move(factors));
}

TraceExpr to_expr(const ExpandedExpr& e) {
  if (e.is_zero()) return TraceExpr::zero(e.sort());
  std::vector<TraceExpr> terms;
  for (const auto& [t, c] : e.terms()) {
    std::vector<TraceExpr> factors;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1) factors.push_back(TraceExpr::constant(mag));
    for (std::size_t i = 0; i < t.traces.size();) {
      std::size_t j = i;
      while (j < t.traces.size() && t.traces[j] == t.traces[i]) ++j;
      TraceExpr tr = TraceExpr::trace(word_expr(t.traces[i]));
      factors.push_back(j - i == 1 ? tr : TraceExpr::power(tr, static_cast<unsigned>(j - i)));
      i = j;
    }
    if (e.sort() == Sort::Matrix) factors.push_back(word_expr(t.word));
    if (factors.empty()) factors.push_back(TraceExpr::constant(1));
    TraceExpr term = TraceExpr::product(std::move(factors));
    terms.push_back(c < 0 ? TraceExpr::neg(term) : term);
  }
  return TraceExpr::sum(std::move(terms));
}

TraceExpr normalize(const TraceExpr& e) { return to_expr(expand(e)); }

}  // namespace tracealg
