#include "tracealg/gl2.hpp"

#include <algorithm>
#include <numeric>

#include "tracealg/expanded.hpp"
#include "tracealg/trace_engine.hpp"

namespace tracealg {

Partition2::Partition2(int a, int b) : l1(a), l2(b) {
  if (b < 0 || a < b) throw Error("not a partition: (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

std::string to_string(const Partition2& p) {
  return "(" + std::to_string(p.l1) + "," + std::to_string(p.l2) + ")";
}

void ModuleMultiset::add(const Partition2& p, unsigned mult) {
  if (mult > 0) m_[p] += mult;
}

unsigned ModuleMultiset::multiplicity(const Partition2& p) const {
  auto it = m_.find(p);
  return it == m_.end() ? 0 : it->second;
}

std::string ModuleMultiset::to_string() const {
  if (m_.empty()) return "0";
  std::string out;
  // Largest partition first.
  for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1) out += std::to_string(it->second);
    out += "W" + tracealg::to_string(it->first);
  }
  return out;
}

MultiPoly schur_poly(const Partition2& p) {
  const auto& cat = series_catalogue();
  MultiPoly out(cat);
  const int d = p.l1 - p.l2;
  for (int j = 0; j <= d; ++j) {
    CommMonomial m;
    m.set_exponent(0, static_cast<unsigned>(p.l2 + d - j));
    m.set_exponent(1, static_cast<unsigned>(p.l2 + j));
    out.add_term(m, 1);
  }
  return out;
}

mpz_class multiplicity_d(const Partition2& p) {
  mpz_class num = 1;
  for (int i = 2; i <= p.size(); ++i) num *= i;
  mpz_class hooks = 1;
  for (int j = 1; j <= p.l1; ++j) hooks *= (p.l1 - j) + 1 + (j <= p.l2 ? 1 : 0);
  for (int j = 1; j <= p.l2; ++j) hooks *= (p.l2 - j) + 1;
  return num / hooks;
}

ModuleMultiset lr_tensor(const Partition2& lambda, const Partition2& mu) {
  Partition2 big = lambda, small = mu;
  if (big.l1 - big.l2 < small.l1 - small.l2) std::swap(big, small);
  const int a = big.l1 - big.l2, b = big.l2;
  const int c = small.l1 - small.l2, d = small.l2;
  ModuleMultiset out;
  for (int s = 0; s <= c; ++s) out.add(Partition2(a + b + d + s, b + d + c - s));
  return out;
}

ModuleMultiset schur_decompose(const MultiPoly& p) {
  if (p.catalogue()->size() != 2 || p.catalogue()->name(0) != "t1" || p.catalogue()->name(1) != "t2") {
    throw Error("schur_decompose expects a polynomial in t1, t2");
  }
  std::map<std::pair<int, int>, Rational> rest;
  for (const auto& [m, c] : p.terms()) {
    if (c < 0 || !is_integer(c)) throw NotSchurPositive("coefficient " + to_string(c) + " is not a natural number");
    rest[{static_cast<int>(m.exponent(0)), static_cast<int>(m.exponent(1))}] = c;
  }
  ModuleMultiset out;
  while (!rest.empty()) {
    // Highest total degree first, then the largest power of t1.
    auto lead = std::max_element(rest.begin(), rest.end(), [](const auto& l, const auto& r) {
      const int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
      return dl != dr ? dl < dr : l.first.first < r.first.first;
    });
    const auto [a, b] = lead->first;
    const Rational c = lead->second;
    if (a < b) {
      throw NotSchurPositive("leading monomial t1^" + std::to_string(a) + "*t2^" + std::to_string(b) +
                             " has a < b");
    }
    for (int j = 0; j <= a - b; ++j) {
      auto key = std::make_pair(a - j, b + j);
      Rational left = rest[key] - c;
      if (left < 0) throw NotSchurPositive("peeling S" + to_string(Partition2(a, b)) + " leaves a negative coefficient");
      if (left == 0) {
        rest.erase(key);
      } else {
        rest[key] = left;
      }
    }
    out.add(Partition2(a, b), static_cast<unsigned>(c.get_num().get_ui()));
  }
  return out;
}

MultiPoly character(const ModuleMultiset& m) {
  MultiPoly out(series_catalogue());
  for (const auto& [p, k] : m.entries()) out += schur_poly(p) * Rational(k);
  return out;
}

bool is_hwv(const TraceExpr& e) {
  auto bd = e.bidegree();
  if (!bd) throw Error("is_hwv expects a homogeneous expression");
  if (bd->x < bd->y) return false;
  return verify_zero(delta(e));
}

Tableau2::Tableau2(Partition2 shape, std::vector<int> sigma) : shape_(shape), sigma_(std::move(sigma)) {
  const int k = shape_.size();
  if (static_cast<int>(sigma_.size()) != k) throw Error("tableau filling has the wrong length");
  std::vector<int> sorted = sigma_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i + 1) throw Error("tableau filling is not a permutation");
  }
  const auto t = top();
  const auto b = bottom();
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i - 1] >= t[i]) throw Error("tableau is not standard: top row decreases");
  }
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i - 1] >= b[i]) throw Error("tableau is not standard: bottom row decreases");
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (t[i] >= b[i]) throw Error("tableau is not standard: column decreases");
  }
}

Tableau2 Tableau2::from_rows(const std::vector<int>& top, const std::vector<int>& bottom) {
  if (top.size() < bottom.size()) throw Error("top row shorter than bottom row");
  std::vector<int> sigma;
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    sigma.push_back(top[i]);
    sigma.push_back(bottom[i]);
  }
  for (std::size_t i = bottom.size(); i < top.size(); ++i) sigma.push_back(top[i]);
  return Tableau2(Partition2(static_cast<int>(top.size()), static_cast<int>(bottom.size())), std::move(sigma));
}

std::vector<int> Tableau2::top() const {
  std::vector<int> out;
  const auto s = static_cast<std::size_t>(shape_.l2);
  for (std::size_t i = 0; i < s; ++i) out.push_back(sigma_[2 * i]);
  for (std::size_t i = 2 * s; i < sigma_.size(); ++i) out.push_back(sigma_[i]);
  return out;
}

std::vector<int> Tableau2::bottom() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(shape_.l2); ++i) out.push_back(sigma_[2 * i + 1]);
  return out;
}

std::vector<Tableau2> standard_tableaux(const Partition2& p) {
  std::vector<Tableau2> out;
  std::vector<int> top, bottom;
  // Place 1..k in order; a number may go to the bottom row only below a
  // filled top cell.
  auto rec = [&](auto&& self, int next) -> void {
    if (next > p.size()) {
      out.push_back(Tableau2::from_rows(top, bottom));
      return;
    }
    if (static_cast<int>(top.size()) < p.l1) {
      top.push_back(next);
      self(self, next + 1);
      top.pop_back();
    }
    if (static_cast<int>(bottom.size()) < p.l2 && bottom.size() < top.size()) {
      bottom.push_back(next);
      self(self, next + 1);
      bottom.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

TraceExpr tableau_hwv(const Tableau2& t) {
  const int k = t.shape().size();
  if (k == 0) return TraceExpr::identity();
  const int s = t.shape().l2;
  const auto& sigma = t.sigma();
  ExpandedExpr acc(Sort::Matrix);
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    std::string word(static_cast<std::size_t>(k), 'x');
    int sign = 1;
    for (int i = 0; i < s; ++i) {
      const bool swapped = (mask >> i) & 1u;
      const auto p1 = static_cast<std::size_t>(sigma[static_cast<std::size_t>(2 * i)] - 1);
      const auto p2 = static_cast<std::size_t>(sigma[static_cast<std::size_t>(2 * i + 1)] - 1);
      word[p1] = swapped ? 'y' : 'x';
      word[p2] = swapped ? 'x' : 'y';
      if (swapped) sign = -sign;
    }
    acc.add(TraceTerm{{}, word}, sign);
  }
  return to_expr(acc);
}

}  // namespace tracealg
