#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tracealg {

/// Exact rational number. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator, and zero as 0/1.
using Rational = mpq_class;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds num/den in canonical form. Throws Error when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace tracealg
