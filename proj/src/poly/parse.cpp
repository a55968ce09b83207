#include "ktypes/poly/parse.hpp"

#include <cctype>
#include <string>

#include "ktypes/error.hpp"

namespace ktypes::poly {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  MultiPoly whole() {
    MultiPoly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character", {"+", "-", "*", "/", "^", "end of input"});
    return p;
  }

  std::vector<MultiPoly> ideal() {
    std::vector<MultiPoly> out;
    expect('[');
    skip();
    if (peek() != ']') {
      out.push_back(expr());
      while (skip(), peek() == ',') {
        ++i_;
        out.push_back(expr());
      }
    }
    expect(']');
    skip();
    if (i_ != s_.size()) fail("unexpected character after ']'", {"end of input"});
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
    throw ParseError(Errc::SyntaxError, SourcePos{1, static_cast<int>(i_) + 1}, msg, std::move(expected));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'", {std::string(1, c)});
    ++i_;
  }

  MultiPoly expr() {
    MultiPoly p = term();
    for (;;) {
      skip();
      if (peek() == '+') {
        ++i_;
        p = p + term();
      } else if (peek() == '-') {
        ++i_;
        p = p - term();
      } else {
        return p;
      }
    }
  }

  MultiPoly term() {
    MultiPoly p = unary();
    for (;;) {
      skip();
      if (peek() == '*') {
        ++i_;
        p = p * unary();
      } else if (peek() == '/') {
        ++i_;
        const std::size_t at = i_;
        MultiPoly d = unary();
        if (d.is_zero() || d.degree() != 0) {
          i_ = at;
          fail(d.is_zero() ? "division by zero" : "division by a non-constant polynomial", {"nonzero constant"});
        }
        p = p * MultiPoly::constant(Rational(1) / d.lead_coeff());
      } else {
        return p;
      }
    }
  }

  MultiPoly unary() {
    skip();
    if (peek() == '-') {
      ++i_;
      return -unary();
    }
    if (peek() == '+') {
      ++i_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    skip();
    if (peek() != '^') return base;
    ++i_;
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent", {"non-negative integer"});
    long k = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      k = k * 10 + (s_[i_++] - '0');
      if (k > 64) fail("exponent too large", {"exponent <= 64"});
    }
    MultiPoly out = MultiPoly::constant(1);
    for (long j = 0; j < k; ++j) out = out * base;
    return out;
  }

  MultiPoly atom() {
    skip();
    const char c = peek();
    if (c == '(') {
      ++i_;
      MultiPoly p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(s_[i_++]);
      return MultiPoly::constant(Rational(mpz_class(digits)));
    }
    for (int v = 0; v < kMaxVars; ++v)
      if (c == kVarNames[v][0]) {
        ++i_;
        return MultiPoly::variable(v);
      }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'",
         {"number", "x", "y", "z", "w", "("});
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).whole(); }

std::vector<MultiPoly> parse_ideal(std::string_view text) { return PolyParser(text).ideal(); }

Univariate parse_univariate(std::string_view text) {
  const MultiPoly p = parse_poly(text);
  const unsigned vars = p.variables();
  if (vars & (vars - 1))
    throw ParseError(Errc::SyntaxError, SourcePos{1, 1}, "expected a polynomial in one variable", {"univariate polynomial"});
  int v = 0;
  while (vars && !((vars >> v) & 1u)) ++v;
  return {p.to_univariate(v), v};
}

}  // namespace ktypes::poly
