#include "tracealg/biseries.hpp"

namespace tracealg {

BiSeries::BiSeries(int cap) : cap_(cap) {
  if (cap < 0) throw Error("negative series cap");
  c_.resize(static_cast<std::size_t>((cap + 1) * (cap + 2) / 2));
}

std::size_t BiSeries::index(int i, int j) const {
  // Row d = i + j starts at d(d+1)/2.
  const int d = i + j;
  return static_cast<std::size_t>(d * (d + 1) / 2 + j);
}

BiSeries BiSeries::one(int cap) {
  BiSeries s(cap);
  s.set(0, 0, 1);
  return s;
}

BiSeries BiSeries::from_poly(const MultiPoly& p, int cap) {
  if (p.catalogue()->size() != 2) throw Error("series polynomial must be in t1, t2");
  BiSeries s(cap);
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() <= static_cast<unsigned>(cap)) {
      s.add(static_cast<int>(m.exponent(0)), static_cast<int>(m.exponent(1)), c);
    }
  }
  return s;
}

Rational BiSeries::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > cap_) return 0;
  return c_[index(i, j)];
}

void BiSeries::set(int i, int j, const Rational& c) {
  if (i < 0 || j < 0 || i + j > cap_) throw Error("series index beyond the cap");
  c_[index(i, j)] = c;
}

void BiSeries::add(int i, int j, const Rational& c) {
  if (i < 0 || j < 0 || i + j > cap_) throw Error("series index beyond the cap");
  c_[index(i, j)] += c;
}

void BiSeries::check_cap(const BiSeries& o) const {
  if (cap_ != o.cap_) throw Error("series caps differ");
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
  check_cap(o);
  BiSeries r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
  return r;
}

BiSeries BiSeries::operator-(const BiSeries& o) const {
  check_cap(o);
  BiSeries r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
  return r;
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
  check_cap(o);
  BiSeries r(cap_);
  for (int d1 = 0; d1 <= cap_; ++d1) {
    for (int j1 = 0; j1 <= d1; ++j1) {
      const Rational& a = c_[index(d1 - j1, j1)];
      if (a == 0) continue;
      for (int d2 = 0; d1 + d2 <= cap_; ++d2) {
        for (int j2 = 0; j2 <= d2; ++j2) {
          const Rational& b = o.c_[index(d2 - j2, j2)];
          if (b == 0) continue;
          r.c_[index(d1 - j1 + d2 - j2, j1 + j2)] += a * b;
        }
      }
    }
  }
  return r;
}

bool BiSeries::operator==(const BiSeries& o) const { return cap_ == o.cap_ && c_ == o.c_; }

MultiPoly BiSeries::homogeneous_component(int k) const {
  MultiPoly p(series_catalogue());
  if (k < 0 || k > cap_) return p;
  for (int j = 0; j <= k; ++j) {
    CommMonomial m;
    m.set_exponent(0, static_cast<unsigned>(k - j));
    m.set_exponent(1, static_cast<unsigned>(j));
    p.add_term(m, c_[index(k - j, j)]);
  }
  return p;
}

MultiPoly BiSeries::to_poly() const {
  MultiPoly p(series_catalogue());
  for (int k = 0; k <= cap_; ++k) p += homogeneous_component(k);
  return p;
}

BiSeries series_expand_factor(int a, int b, int n) {
  if (a < 0 || b < 0) throw Error("negative factor exponent");
  if (a == 0 && b == 0) throw Error("factor 1 - t1^0 t2^0 is not invertible");
  BiSeries s(n);
  for (int k = 0; k * (a + b) <= n; ++k) s.set(k * a, k * b, 1);
  return s;
}

}  // namespace tracealg
