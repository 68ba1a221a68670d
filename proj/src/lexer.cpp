#include "lexer.hpp"

#include <cctype>

namespace hadamard::detail {

std::vector<Token> tokenize(const std::string& input) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  const std::size_t n = input.size();

  auto push = [&](TokenType type, std::string text, int tline, int tcol) {
    out.push_back({type, std::move(text), tline, tcol});
  };

  while (i < n) {
    char c = input[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    if (c == '#') {  // line comment
      while (i < n && input[i] != '\n') ++i;
      continue;
    }

    const int tline = line, tcol = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      // "1/2": the slash joins only when digits follow immediately
      if (i < n && input[i] == '/' && i + 1 < n &&
          std::isdigit(static_cast<unsigned char>(input[i + 1]))) {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      }
      std::string text = input.substr(start, i - start);
      column += static_cast<int>(i - start);
      push(TokenType::Number, std::move(text), tline, tcol);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < n && (std::isalnum(static_cast<unsigned char>(input[i])) ||
                       input[i] == '_'))
        ++i;
      std::string text = input.substr(start, i - start);
      column += static_cast<int>(i - start);
      push(TokenType::Identifier, std::move(text), tline, tcol);
      continue;
    }

    TokenType type;
    switch (c) {
      case '+': type = TokenType::Plus; break;
      case '-': type = TokenType::Minus; break;
      case '*': type = TokenType::Star; break;
      case '^': type = TokenType::Caret; break;
      case '(': type = TokenType::LParen; break;
      case ')': type = TokenType::RParen; break;
      case '{': type = TokenType::LBrace; break;
      case '}': type = TokenType::RBrace; break;
      case '[': type = TokenType::LBracket; break;
      case ']': type = TokenType::RBracket; break;
      case ',': type = TokenType::Comma; break;
      case ';': type = TokenType::Semicolon; break;
      case '=': type = TokenType::Assign; break;
      default:
        throw ParseError("unexpected-character", tline, tcol,
                         std::string("unexpected character '") + c + "'");
    }
    push(type, std::string(1, c), tline, tcol);
    ++column;
    ++i;
  }
  out.push_back({TokenType::End, "", line, column});
  return out;
}

}  // namespace hadamard::detail
