#pragma once

#include <vector>

#include "tracealg/poly.hpp"
#include "tracealg/rational.hpp"

namespace tracealg {

/// Power series in t1, t2 truncated to total degree <= cap.
class BiSeries {
 public:
  explicit BiSeries(int cap);

  static BiSeries one(int cap);
  /// Truncation of a polynomial in t1, t2 (series_catalogue()).
  static BiSeries from_poly(const MultiPoly& p, int cap);

  int cap() const { return cap_; }
  /// Zero outside the cap.
  Rational coeff(int i, int j) const;
  void set(int i, int j, const Rational& c);
  void add(int i, int j, const Rational& c);

  BiSeries operator+(const BiSeries& o) const;
  BiSeries operator-(const BiSeries& o) const;
  BiSeries operator*(const BiSeries& o) const;
  bool operator==(const BiSeries& o) const;

  /// Degree-k part as a polynomial in t1, t2.
  MultiPoly homogeneous_component(int k) const;
  /// Everything up to the cap as a polynomial.
  MultiPoly to_poly() const;

 private:
  std::size_t index(int i, int j) const;
  void check_cap(const BiSeries& o) const;

  int cap_;
  std::vector<Rational> c_;
};

/// 1/(1 - t1^a t2^b) truncated to total degree n. Throws for a = b = 0.
BiSeries series_expand_factor(int a, int b, int n);

}  // namespace tracealg
