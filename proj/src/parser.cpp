#include "hadamard/parser.hpp"

#include "hadamard/errors.hpp"
#include "lexer.hpp"

namespace hadamard {

using detail::Token;
using detail::TokenStream;
using detail::TokenType;

namespace {

constexpr unsigned kMaxExponent = 100000;

Rational numberValue(const Token& token) {
  try {
    return Rational::fromString(token.text);
  } catch (const std::invalid_argument& e) {
    TokenStream::fail(token, e.what(), "malformed-rational");
  }
}

class PolynomialParser {
public:
  PolynomialParser(TokenStream& ts, RingPtr ring)
      : ts_(ts), ring_(std::move(ring)) {}

  Polynomial parseExpression() {
    bool negate = false;
    if (ts_.match(TokenType::Minus))
      negate = true;
    else
      ts_.match(TokenType::Plus);
    Polynomial p = parseTerm();
    if (negate) p = -p;
    while (true) {
      if (ts_.match(TokenType::Plus)) {
        p = p + parseTerm();
      } else if (ts_.match(TokenType::Minus)) {
        p = p - parseTerm();
      } else {
        break;
      }
    }
    return p;
  }

private:
  Polynomial parseTerm() {
    bool wasNumber = false;
    Polynomial p = parseFactor(&wasNumber);
    while (true) {
      if (ts_.match(TokenType::Star)) {
        p = p * parseFactor(&wasNumber);
        continue;
      }
      const Token& t = ts_.peek();
      if (t.type == TokenType::Identifier) {
        // juxtaposition is multiplication only after a numeric literal
        if (!wasNumber)
          TokenStream::fail(t, "adjacent factors need '*' (write x*y)",
                            "missing-operator");
        p = p * parseFactor(&wasNumber);
        continue;
      }
      if (t.type == TokenType::Number || t.type == TokenType::LParen)
        TokenStream::fail(t, "adjacent factors need '*'", "missing-operator");
      break;
    }
    return p;
  }

  Polynomial parseFactor(bool* wasNumber) {
    *wasNumber = false;
    if (ts_.match(TokenType::Minus)) {
      Polynomial p = parseFactor(wasNumber);
      *wasNumber = false;
      return -p;
    }
    const Token& t = ts_.peek();
    Polynomial base;
    if (t.type == TokenType::Number) {
      ts_.next();
      base = Polynomial::constant(ring_, numberValue(t));
      *wasNumber = true;
    } else if (t.type == TokenType::Identifier) {
      ts_.next();
      auto idx = ring_->indexOf(t.text);
      if (!idx)
        TokenStream::fail(t, "unknown variable '" + t.text + "'",
                          "unknown-variable");
      base = Polynomial::variable(ring_, *idx);
    } else if (ts_.match(TokenType::LParen)) {
      base = parseExpression();
      ts_.expect(TokenType::RParen, "')'");
    } else {
      TokenStream::fail(t, "expected a number, variable or '('");
    }

    if (ts_.peek().type == TokenType::Caret) {
      ts_.next();
      const Token& e = ts_.expect(TokenType::Number, "an exponent");
      Rational r = numberValue(e);
      if (!r.isInteger() || r.sign() < 0)
        TokenStream::fail(e, "exponent must be a non-negative integer",
                          "invalid-exponent");
      if (r.numerator() > kMaxExponent)
        TokenStream::fail(e, "exponent too large", "invalid-exponent");
      base = base.pow(static_cast<unsigned>(r.numerator().get_ui()));
      *wasNumber = false;
    }
    return base;
  }

  TokenStream& ts_;
  RingPtr ring_;
};

void requireConsumedAll(TokenStream& ts) {
  if (!ts.atEnd())
    TokenStream::fail(ts.peek(), "unexpected trailing input");
}

ProjectivePoint parsePointLiteral(TokenStream& ts) {
  TokenType closer;
  const Token& open = ts.peek();
  if (ts.match(TokenType::LBrace)) {
    closer = TokenType::RBrace;
  } else if (ts.match(TokenType::LBracket)) {
    closer = TokenType::RBracket;
  } else {
    TokenStream::fail(open, "expected '{' or '[' starting a point");
  }
  std::vector<Rational> coords;
  do {
    bool negate = ts.match(TokenType::Minus);
    if (!negate) ts.match(TokenType::Plus);
    const Token& num = ts.expect(TokenType::Number, "a rational coordinate");
    Rational v = numberValue(num);
    coords.push_back(negate ? -v : v);
  } while (ts.match(TokenType::Comma));
  ts.expect(closer, closer == TokenType::RBrace ? "'}'" : "']'");
  return ProjectivePoint(std::move(coords));
}

}  // namespace

Polynomial parsePolynomial(const std::string& text, const RingPtr& ring) {
  TokenStream ts(detail::tokenize(text));
  if (ts.atEnd())
    throw ParseError("empty-input", 1, 1, "empty polynomial expression");
  PolynomialParser parser(ts, ring);
  Polynomial p = parser.parseExpression();
  requireConsumedAll(ts);
  return p;
}

std::vector<Polynomial> parseGeneratorList(const std::string& text,
                                           const RingPtr& ring) {
  TokenStream ts(detail::tokenize(text));
  if (ts.atEnd())
    throw ParseError("empty-input", 1, 1, "empty generator list");
  PolynomialParser parser(ts, ring);
  std::vector<Polynomial> out;
  out.push_back(parser.parseExpression());
  while (ts.match(TokenType::Comma)) out.push_back(parser.parseExpression());
  requireConsumedAll(ts);
  return out;
}

ProjectivePoint parsePoint(const std::string& text) {
  TokenStream ts(detail::tokenize(text));
  ProjectivePoint p = parsePointLiteral(ts);
  requireConsumedAll(ts);
  return p;
}

PointList parsePointList(const std::string& text) {
  TokenStream ts(detail::tokenize(text));
  PointList out;
  // nested braces mean a list of literals; a flat literal is a singleton
  if (ts.peek().type == TokenType::LBrace &&
      (ts.peek(1).type == TokenType::LBrace ||
       ts.peek(1).type == TokenType::LBracket)) {
    ts.next();
    do {
      out.push_back(parsePointLiteral(ts));
    } while (ts.match(TokenType::Comma));
    ts.expect(TokenType::RBrace, "'}'");
  } else {
    out.push_back(parsePointLiteral(ts));
  }
  requireConsumedAll(ts);
  return out;
}

}  // namespace hadamard
