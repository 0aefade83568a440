#include "tracealg/freealg.hpp"

#include <algorithm>
#include <cctype>

#include "tracealg/parser.hpp"

namespace tracealg {

namespace {

int letter_rank(char c) {
  switch (c) {
    case 'w': return 3;
    case 'x': return 2;
    default: return 1;
  }
}

const char* letter_name(char c) {
  switch (c) {
    case 'w': return "w33";
    case 'x': return "x1";
    case 'y': return "y1";
    default: throw Error(std::string("invalid word letter '") + c + "'");
  }
}

}  // namespace

int word_weight(const NCWord& w) {
  int n = 0;
  for (char c : w) n += c == 'w' ? 6 : 1;
  return n;
}

Bidegree word_bidegree(const NCWord& w) {
  Bidegree b;
  for (char c : w) {
    if (c == 'x') b = b + Bidegree{1, 0};
    else if (c == 'y') b = b + Bidegree{0, 1};
    else b = b + Bidegree{3, 3};
  }
  return b;
}

std::string word_to_string(const NCWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += letter_name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::strong_ordering compare_words(const NCWord& a, const NCWord& b) {
  if (auto c = word_weight(a) <=> word_weight(b); c != 0) return c;
  const auto wa = std::count(a.begin(), a.end(), 'w');
  const auto wb = std::count(b.begin(), b.end(), 'w');
  if (wa != wb) return wb <=> wa;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (auto c = letter_rank(a[i]) <=> letter_rank(b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

Bidegree GenMonomial::bidegree() const { return u.bidegree(*u_catalogue()) + word_bidegree(word); }

std::string GenMonomial::to_string() const {
  if (u.is_one()) return word_to_string(word);
  if (word.empty()) return u.to_string(*u_catalogue());
  return u.to_string(*u_catalogue()) + "*" + word_to_string(word);
}

std::strong_ordering compare(const GenMonomial& a, const GenMonomial& b) {
  if (auto c = compare_words(a.word, b.word); c != 0) return c;
  return a.u <=> b.u;
}

GenMonomial operator*(const GenMonomial& a, const GenMonomial& b) { return {a.u * b.u, a.word + b.word}; }

std::optional<Division> divides(const GenMonomial& d, const GenMonomial& m) {
  if (!d.u.divides(m.u)) return std::nullopt;
  const auto pos = m.word.find(d.word);
  if (pos == NCWord::npos) return std::nullopt;
  return Division{m.u.quotient(d.u), m.word.substr(0, pos), m.word.substr(pos + d.word.size())};
}

FreeElement FreeElement::monomial(const GenMonomial& m, const Rational& c) {
  FreeElement f;
  f.add_term(m, c);
  return f;
}

FreeElement FreeElement::constant(const Rational& c) { return monomial(GenMonomial{}, c); }

FreeElement FreeElement::generator(std::string_view name) {
  if (name == "x1") return monomial({{}, "x"});
  if (name == "y1") return monomial({{}, "y"});
  if (name == "w33") return monomial({{}, "w"});
  if (auto i = u_catalogue()->index_of(name)) return monomial({CommMonomial::variable(*i), ""});
  throw Error("unknown generator '" + std::string(name) + "'");
}

Rational FreeElement::coefficient(const GenMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const GenMonomial& FreeElement::lead() const {
  if (terms_.empty()) throw Error("zero element has no leading monomial");
  return terms_.rbegin()->first;
}

const Rational& FreeElement::lead_coefficient() const {
  if (terms_.empty()) throw Error("zero element has no leading monomial");
  return terms_.rbegin()->second;
}

void FreeElement::add_term(const GenMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  return r *= -1;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

FreeElement FreeElement::pow(unsigned n) const {
  FreeElement r = constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

FreeElement FreeElement::multiplied(const CommMonomial& c, const NCWord& h1, const NCWord& h2) const {
  FreeElement r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(GenMonomial{c * m.u, h1 + m.word + h2}, v);
  return r;
}

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = m.u.is_one() && m.word.empty();
    if (unit) {
      out += tracealg::to_string(a);
    } else if (a == 1) {
      out += m.to_string();
    } else {
      out += tracealg::to_string(a) + "*" + m.to_string();
    }
  }
  return out;
}

namespace {

class FreeParser {
 public:
  explicit FreeParser(std::string_view s) : s_(s) {}

  FreeElement parse_all() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(0, "empty input");
    FreeElement e = sum();
    skip();
    if (pos_ < s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  FreeElement sum() {
    const bool neg = accept('-');
    FreeElement acc = product();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  FreeElement product() {
    FreeElement acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  FreeElement power() {
    FreeElement base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(start, "expected a natural exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  FreeElement atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FreeElement e = sum();
      if (!accept(')')) throw ParseError(pos_, "unbalanced delimiters: expected ')'");
      return e;
    }
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      try {
        return FreeElement::constant(parse_rational(s_.substr(start, pos_ - start)));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(start, e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      try {
        return FreeElement::generator(s_.substr(start, pos_ - start));
      } catch (const Error&) {
        throw ParseError(start, "unknown symbol '" + std::string(s_.substr(start, pos_ - start)) + "'");
      }
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeElement parse_free(std::string_view text) { return FreeParser(text).parse_all(); }

}  // namespace tracealg
