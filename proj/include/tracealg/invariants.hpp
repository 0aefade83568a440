#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tracealg/expr.hpp"
#include "tracealg/poly.hpp"

namespace tracealg {

struct NamedInvariant {
  std::string name;
  TraceExpr expr;
};

/// u, v, w, w1, w2, w3', w3'', w4, w5, w6, w7 as trace expressions, in that
/// order. Determinants are written out by cofactors.
const std::vector<NamedInvariant>& invariant_exprs();

/// Looks up one of the names above. Throws Error for unknown names.
const TraceExpr& invariant(std::string_view name);

/// Every named invariant expanded in the entry variables.
using InvariantTable = std::map<std::string, MultiPoly>;
InvariantTable build_invariants();

/// w^2 - (1/27 w1 - 2/9 w2 + 4/15 w3' + 1/90 w3'' + 1/3 w4 - 2/3 w5
///        - 1/3 w6 - 4/27 w7).
TraceExpr defining_relation();

/// The combination subtracted from w^2 above.
TraceExpr defining_relation_rhs();

/// w3'' rebuilt as (1/144) sum_{i=0..6} (-1)^i delta^i(tr(y^2)^3)
/// delta^(6-i)(tr(y^3)^2).
TraceExpr w3pp_delta_sum();

}  // namespace tracealg
