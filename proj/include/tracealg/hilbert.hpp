#pragma once

#include <map>
#include <string>
#include <vector>

#include "tracealg/biseries.hpp"
#include "tracealg/poly.hpp"

namespace tracealg {

/// numerator / prod (1 - t1^a t2^b) over the listed (a, b).
struct RationalSeriesSpec {
  MultiPoly numerator;
  std::vector<Bidegree> denominator;
};

BiSeries expand(const RationalSeriesSpec& spec, int n);

/// C32, T32, C0 and T0.
const std::map<std::string, RationalSeriesSpec>& closed_forms();
const RationalSeriesSpec& closed_form(const std::string& name);

/// (sum of t1^a t2^b over generators) * prod 1/(1 - t1^a t2^b) over factors.
BiSeries free_module_series(const std::vector<Bidegree>& generators, const std::vector<Bidegree>& factors, int n);

/// Bidegrees of tr(X), tr(Y), tr(x^2), tr(xy), tr(y^2), tr(x^3), tr(x^2y),
/// tr(xy^2), tr(y^3) and v.
std::vector<Bidegree> s_generator_bidegrees();

/// Bidegrees of a basis of the free generators of T32 over S: the
/// weight spaces of W(0,0), W(1,0), W(2,0), W(1,1), 2W(2,1), W(3,1),
/// W(2,2), W(3,2) and of w.
std::vector<Bidegree> free_generator_bidegrees();

}  // namespace tracealg
