#include "tracealg/parser.hpp"

#include <cctype>
#include <vector>

namespace tracealg {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error("parse error at offset " + std::to_string(offset) + ": " + message), offset_(offset), detail_(message) {}

namespace {

enum class Tok { X, Y, E, Tr, T1, T2, LParen, RParen, LBrack, RBrack, Comma, O, Star, Caret, Plus, Minus, Number, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::size_t length;
  std::string_view text;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

// Letters recognized depend on the language: trace expressions use x, y, e,
// o and tr; bivariate polynomials use t1 and t2.
std::vector<Token> lex(std::string_view s, bool bivariate) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    auto single = [&](Tok k) {
      out.push_back({k, i, 1, s.substr(i, 1)});
      ++i;
    };
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/') {
        std::size_t k = j + 1;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j + 1) throw ParseError(j, "expected a denominator after '/'");
        bool zero = s.substr(j + 1, k - j - 1).find_first_not_of('0') == std::string_view::npos;
        if (zero) throw ParseError(j + 1, "zero denominator");
        j = k;
      }
      out.push_back({Tok::Number, i, j - i, s.substr(i, j - i)});
      i = j;
      continue;
    }
    switch (ch) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case '*': single(Tok::Star); continue;
      case '^': single(Tok::Caret); continue;
      case '+': single(Tok::Plus); continue;
      case '-': single(Tok::Minus); continue;
      default: break;
    }
    if (bivariate) {
      if (ch == 't' && i + 1 < s.size() && (s[i + 1] == '1' || s[i + 1] == '2')) {
        out.push_back({s[i + 1] == '1' ? Tok::T1 : Tok::T2, i, 2, s.substr(i, 2)});
        i += 2;
        continue;
      }
    } else {
      switch (ch) {
        case '[': single(Tok::LBrack); continue;
        case ']': single(Tok::RBrack); continue;
        case ',': single(Tok::Comma); continue;
        case 'x': single(Tok::X); continue;
        case 'y': single(Tok::Y); continue;
        case 'e': single(Tok::E); continue;
        case 'o': single(Tok::O); continue;
        default: break;
      }
      if (ch == 't' && i + 1 < s.size() && s[i + 1] == 'r') {
        out.push_back({Tok::Tr, i, 2, s.substr(i, 2)});
        i += 2;
        continue;
      }
    }
    throw ParseError(i, "unknown symbol '" + std::string(1, ch) + "'");
  }
  out.push_back({Tok::End, s.size(), 0, {}});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& take() {
    const Token& t = toks_[pos_];
    last_ = t.offset + (t.length ? t.length - 1 : 0);
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    take();
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (!at(k)) {
      throw ParseError(peek().offset, std::string("expected ") + what + ", found " + describe(peek()));
    }
    return take();
  }
  /// Offset of the last character of the most recently consumed token.
  std::size_t last() const { return last_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
};

unsigned parse_natural(const Token& t) {
  if (t.kind != Tok::Number || t.text.find('/') != std::string_view::npos) {
    throw ParseError(t.offset, "expected a natural exponent, found " + describe(t));
  }
  if (t.text.size() > 4) throw ParseError(t.offset, "exponent too large");
  return static_cast<unsigned>(std::stoul(std::string(t.text)));
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : cur_(lex(text, false)) {}

  TraceExpr parse_all() {
    if (cur_.at(Tok::End)) throw ParseError(0, "empty input");
    TraceExpr e = parse_sum();
    if (cur_.at(Tok::RParen) || cur_.at(Tok::RBrack)) {
      throw ParseError(cur_.peek().offset, "unbalanced " + describe(cur_.peek()));
    }
    if (!cur_.at(Tok::End)) throw ParseError(cur_.peek().offset, "unexpected " + describe(cur_.peek()));
    return e;
  }

 private:
  TraceExpr parse_sum() {
    const bool lead_minus = cur_.accept(Tok::Minus);
    TraceExpr first = parse_anti();
    if (lead_minus) first = TraceExpr::neg(first);
    if (!cur_.at(Tok::Plus) && !cur_.at(Tok::Minus)) return first;
    std::vector<TraceExpr> terms{first};
    while (cur_.at(Tok::Plus) || cur_.at(Tok::Minus)) {
      const Token& op = cur_.take();
      const bool minus = op.kind == Tok::Minus;
      const std::size_t at = op.offset;
      TraceExpr t = parse_anti();
      if (t.sort() != terms.front().sort()) throw ParseError(at, "sort error: sum of matrix and scalar");
      terms.push_back(minus ? TraceExpr::neg(t) : t);
    }
    return TraceExpr::sum(std::move(terms));
  }

  TraceExpr parse_anti() {
    TraceExpr left = parse_product();
    while (cur_.at(Tok::O)) {
      const std::size_t at = cur_.take().offset;
      TraceExpr right = parse_product();
      if (left.sort() != Sort::Matrix || right.sort() != Sort::Matrix) {
        throw ParseError(at, "sort error: anticommutator of a scalar");
      }
      left = TraceExpr::anticommutator(left, right);
    }
    return left;
  }

  TraceExpr parse_product() {
    std::vector<TraceExpr> factors{parse_power()};
    while (cur_.accept(Tok::Star)) factors.push_back(parse_power());
    return TraceExpr::product(std::move(factors));
  }

  TraceExpr parse_power() {
    TraceExpr base = parse_atom();
    if (cur_.accept(Tok::Caret)) {
      const Token& t = cur_.take();
      return TraceExpr::power(base, parse_natural(t));
    }
    return base;
  }

  TraceExpr parse_atom() {
    const Token& t = cur_.peek();
    switch (t.kind) {
      case Tok::X: cur_.take(); return TraceExpr::x();
      case Tok::Y: cur_.take(); return TraceExpr::y();
      case Tok::E: cur_.take(); return TraceExpr::identity();
      case Tok::Number: {
        cur_.take();
        return TraceExpr::constant(parse_rational(t.text));
      }
      case Tok::Tr: {
        cur_.take();
        cur_.expect(Tok::LParen, "'(' after tr");
        TraceExpr arg = parse_sum();
        if (arg.sort() != Sort::Matrix) throw ParseError(cur_.last(), "sort error: trace of a scalar");
        expect_close(Tok::RParen, "')'");
        return TraceExpr::trace(arg);
      }
      case Tok::LBrack: {
        cur_.take();
        TraceExpr a = parse_sum();
        if (a.sort() != Sort::Matrix) throw ParseError(cur_.last(), "sort error: commutator of a scalar");
        cur_.expect(Tok::Comma, "','");
        TraceExpr b = parse_sum();
        if (b.sort() != Sort::Matrix) throw ParseError(cur_.last(), "sort error: commutator of a scalar");
        expect_close(Tok::RBrack, "']'");
        return TraceExpr::commutator(a, b);
      }
      case Tok::LParen: {
        cur_.take();
        TraceExpr inner = parse_sum();
        expect_close(Tok::RParen, "')'");
        return inner;
      }
      case Tok::End: throw ParseError(t.offset, "unexpected end of input");
      default: throw ParseError(t.offset, "unexpected " + describe(t));
    }
  }

  void expect_close(Tok k, const char* what) {
    if (cur_.at(k)) {
      cur_.take();
      return;
    }
    throw ParseError(cur_.peek().offset,
                     std::string("unbalanced delimiters: expected ") + what + ", found " + describe(cur_.peek()));
  }

  Cursor cur_;
};

// Precedence levels used by the renderer; a child whose level is below the
// level its position requires is parenthesized.
int level(const TraceExpr& e) {
  switch (e.kind()) {
    case ExprKind::Sum:
    case ExprKind::Neg: return 1;
    case ExprKind::Anticommutator: return 2;
    case ExprKind::Product: return 3;
    case ExprKind::Power: return 4;
    default: return 5;
  }
}

std::string render_at(const TraceExpr& e, int min_level);

std::string render_raw(const TraceExpr& e) {
  const auto& cs = e.children();
  switch (e.kind()) {
    case ExprKind::LetterX: return "x";
    case ExprKind::LetterY: return "y";
    case ExprKind::Identity: return "e";
    case ExprKind::Constant: return to_string(e.value());
    case ExprKind::Trace: return "tr(" + render_at(cs[0], 0) + ")";
    case ExprKind::Commutator: return "[" + render_at(cs[0], 0) + "," + render_at(cs[1], 0) + "]";
    case ExprKind::Anticommutator: return render_at(cs[0], 2) + " o " + render_at(cs[1], 3);
    case ExprKind::Power: return render_at(cs[0], 5) + "^" + std::to_string(e.exponent());
    case ExprKind::Neg: return "-" + render_at(cs[0], 2);
    case ExprKind::Product: {
      std::string out;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += "*";
        out += render_at(cs[i], 4);
      }
      return out;
    }
    case ExprKind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const bool negative = cs[i].kind() == ExprKind::Neg;
        if (i == 0) {
          out += negative ? "-" + render_at(cs[i].children()[0], 2) : render_at(cs[i], 2);
        } else {
          out += negative ? " - " + render_at(cs[i].children()[0], 2) : " + " + render_at(cs[i], 2);
        }
      }
      return out;
    }
  }
  throw Error("unknown expression kind");
}

std::string render_at(const TraceExpr& e, int min_level) {
  std::string s = render_raw(e);
  return level(e) < min_level ? "(" + s + ")" : s;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : cur_(lex(text, true)) {}

  MultiPoly parse_all() {
    if (cur_.at(Tok::End)) throw ParseError(0, "empty input");
    MultiPoly p = parse_sum();
    if (cur_.at(Tok::RParen)) throw ParseError(cur_.peek().offset, "unbalanced ')'");
    if (!cur_.at(Tok::End)) throw ParseError(cur_.peek().offset, "unexpected " + describe(cur_.peek()));
    return p;
  }

 private:
  MultiPoly parse_sum() {
    const bool lead_minus = cur_.accept(Tok::Minus);
    MultiPoly acc = parse_product();
    if (lead_minus) acc = -acc;
    while (cur_.at(Tok::Plus) || cur_.at(Tok::Minus)) {
      const bool minus = cur_.take().kind == Tok::Minus;
      MultiPoly t = parse_product();
      if (minus) acc -= t; else acc += t;
    }
    return acc;
  }

  MultiPoly parse_product() {
    MultiPoly acc = parse_power();
    while (cur_.accept(Tok::Star)) acc = acc * parse_power();
    return acc;
  }

  MultiPoly parse_power() {
    MultiPoly base = parse_atom();
    if (cur_.accept(Tok::Caret)) return base.pow(parse_natural(cur_.take()));
    return base;
  }

  MultiPoly parse_atom() {
    const auto& cat = series_catalogue();
    const Token& t = cur_.peek();
    switch (t.kind) {
      case Tok::T1: cur_.take(); return MultiPoly::variable(cat, 0);
      case Tok::T2: cur_.take(); return MultiPoly::variable(cat, 1);
      case Tok::Number: cur_.take(); return MultiPoly::constant(cat, parse_rational(t.text));
      case Tok::LParen: {
        cur_.take();
        MultiPoly inner = parse_sum();
        if (!cur_.at(Tok::RParen)) {
          throw ParseError(cur_.peek().offset, "unbalanced delimiters: expected ')', found " + describe(cur_.peek()));
        }
        cur_.take();
        return inner;
      }
      case Tok::End: throw ParseError(t.offset, "unexpected end of input");
      default: throw ParseError(t.offset, "unexpected " + describe(t));
    }
  }

  Cursor cur_;
};

}  // namespace

TraceExpr parse(std::string_view text) { return ExprParser(text).parse_all(); }

std::string render(const TraceExpr& e) { return render_at(e, 0); }

MultiPoly parse_bivariate(std::string_view text) { return PolyParser(text).parse_all(); }

}  // namespace tracealg
