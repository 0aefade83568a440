#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "tracealg/expr.hpp"
#include "tracealg/poly.hpp"

namespace tracealg {

/// Parse failure with the byte offset (0-based) it was detected at.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

/// Parses the trace-expression language:
///
///   sum     = [ "-" ] anti { ( "+" | "-" ) anti }
///   anti    = product { "o" product }
///   product = power { "*" power }
///   power   = atom [ "^" natural ]
///   atom    = "x" | "y" | "e" | rational | "tr" "(" sum ")"
///           | "[" sum "," sum "]" | "(" sum ")"
///   rational = natural [ "/" natural ]
///
/// Whitespace is insignificant. Products need an explicit "*".
TraceExpr parse(std::string_view text);

/// Canonical text; parse(render(e)) == e for canonical trees.
std::string render(const TraceExpr& e);

/// Parses a polynomial in t1, t2 with +, -, *, ^, parentheses and rational
/// literals, e.g. "t1^2 + t1*t2 + t2^2".
MultiPoly parse_bivariate(std::string_view text);

}  // namespace tracealg
