#ifndef HADAMARD_SRC_LEXER_HPP
#define HADAMARD_SRC_LEXER_HPP

#include <string>
#include <vector>

#include "hadamard/errors.hpp"

namespace hadamard::detail {

enum class TokenType {
  Number,      // "12" or "5/7" (slash binds only between adjacent digits)
  Identifier,  // [A-Za-z_][A-Za-z0-9_]*
  Plus, Minus, Star, Caret,
  LParen, RParen, LBrace, RBrace, LBracket, RBracket,
  Comma, Semicolon, Assign,
  End,
};

struct Token {
  TokenType type;
  std::string text;
  int line;
  int column;
};

/// Tokenizes the whole input up front. '#' starts a line comment.
/// Unexpected characters raise positioned ParseErrors.
std::vector<Token> tokenize(const std::string& input);

/// Token stream cursor with convenience expectations.
class TokenStream {
public:
  explicit TokenStream(std::vector<Token> tokens)
      : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.type != TokenType::End) ++pos_;
    return t;
  }
  bool match(TokenType type) {
    if (peek().type != type) return false;
    next();
    return true;
  }
  const Token& expect(TokenType type, const std::string& what) {
    if (peek().type != type) fail(peek(), "expected " + what);
    return next();
  }
  bool atEnd() const { return peek().type == TokenType::End; }

  [[noreturn]] static void fail(const Token& at, const std::string& message,
                                const std::string& code = "syntax-error") {
    throw ParseError(code, at.line, at.column, message);
  }

private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace hadamard::detail

#endif
