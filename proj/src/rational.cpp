#include "tracealg/rational.hpp"

#include <cctype>

namespace tracealg {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t num_end = digits(i);
  if (num_end == i) throw Error("malformed rational '" + std::string(text) + "'");
  mpz_class num(std::string(text.substr(i, num_end - i)));
  mpz_class den = 1;
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw Error("malformed rational '" + std::string(text) + "'");
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) {
      throw Error("malformed rational '" + std::string(text) + "'");
    }
    den = mpz_class(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
    if (den == 0) throw Error("rational with zero denominator");
  }
  Rational r(negative ? mpz_class(-num) : num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace tracealg
