#include "fanring/expr.hpp"

#include <cctype>

#include "fanring/errors.hpp"

namespace fanring {

namespace {

constexpr long kMaxExponent = 64;

struct Parser {
  const std::string& text;
  Mode mode;
  int d;
  int n;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw parse_error(message, at);
  }

  long digits(const char* what) {
    skip();
    std::size_t start = pos;
    long value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000) fail("number too large", start);
      ++pos;
    }
    if (pos == start) fail(std::string("expected ") + what, start);
    return value;
  }

  // An atom remembers when it is a bare r generator, the one place a
  // negative exponent is meaningful.
  struct Atom {
    XPolynomial value;
    int r_index = -1;
  };

  Atom atom() {
    skip();
    std::size_t start = pos;
    if (pos >= text.size()) fail("expected a value", start);
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = digits("a number");
      return {XPolynomial::scalar(d, CoeffElem::constant(mode, n, v)), -1};
    }
    if (c == 'x' || c == 'r') {
      ++pos;
      long idx = digits("a generator index");
      int limit = c == 'x' ? d : n;
      if (idx < 1 || idx > limit)
        fail(std::string("unknown generator ") + c + std::to_string(idx),
             start);
      if (c == 'x')
        return {XPolynomial::variable(mode, d, n, static_cast<int>(idx) - 1),
                -1};
      return {XPolynomial::scalar(
                  d, CoeffElem::r(mode, n, static_cast<int>(idx) - 1)),
              static_cast<int>(idx) - 1};
    }
    if (c == '(') {
      ++pos;
      XPolynomial inner = expr();
      if (!eat(')')) fail("expected )", pos);
      return {std::move(inner), -1};
    }
    fail("expected a value", start);
  }

  XPolynomial factor() {
    Atom base = atom();
    if (!eat('^')) return std::move(base.value);
    std::size_t at = pos;
    bool negative = eat('-');
    long e = digits("an exponent");
    if (e > kMaxExponent) fail("exponent too large", at);
    if (negative) {
      if (base.r_index < 0)
        fail("negative exponents only apply to r generators", at);
      return XPolynomial::scalar(
          d, CoeffElem::r(mode, n, base.r_index, static_cast<int>(-e)));
    }
    if (base.r_index >= 0)
      return XPolynomial::scalar(
          d, CoeffElem::r(mode, n, base.r_index, static_cast<int>(e)));
    XPolynomial out = XPolynomial::one(mode, d, n);
    for (long k = 0; k < e; ++k) out = out * base.value;
    return out;
  }

  XPolynomial term() {
    XPolynomial out = factor();
    while (eat('*')) out = out * factor();
    return out;
  }

  XPolynomial expr() {
    bool negate = false;
    skip();
    if (eat('-'))
      negate = true;
    else
      eat('+');
    XPolynomial out = term();
    if (negate) out = -out;
    while (true) {
      if (eat('+'))
        out = out + term();
      else if (eat('-'))
        out = out - term();
      else
        return out;
    }
  }
};

}  // namespace

XPolynomial parse_poly_expr(const std::string& text, Mode mode, int d, int n) {
  Parser parser{text, mode, d, n};
  XPolynomial out = parser.expr();
  parser.skip();
  if (parser.pos != text.size())
    parser.fail("unexpected trailing input", parser.pos);
  return out;
}

}  // namespace fanring
