#ifndef HADAMARD_ERRORS_HPP
#define HADAMARD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hadamard {

/// Base class for all mathematical errors raised by the engine.
/// Every error carries a stable kebab-case code usable by front ends.
class MathError : public std::runtime_error {
public:
  MathError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

/// Two values do not share a ring context, or arities disagree.
class ContextError : public MathError {
public:
  explicit ContextError(const std::string& what)
      : MathError("context-mismatch", what) {}
};

/// Input is outside an operation's mathematical domain
/// (undefined star product, zero polynomial leading term, ...).
class DomainError : public MathError {
public:
  DomainError(std::string code, const std::string& what)
      : MathError(std::move(code), what) {}
};

/// A Groebner computation exceeded its pair-reduction budget.
class BudgetError : public MathError {
public:
  explicit BudgetError(const std::string& what)
      : MathError("budget-exceeded", what) {}
};

/// Syntax or name-resolution failure. Positions are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string code, int line, int column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        code_(std::move(code)), line_(line), column_(column) {}

  const std::string& code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

private:
  std::string code_;
  int line_;
  int column_;
};

}  // namespace hadamard

#endif
