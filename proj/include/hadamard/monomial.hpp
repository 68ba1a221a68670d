#ifndef HADAMARD_MONOMIAL_HPP
#define HADAMARD_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hadamard {

/// Exponent vector of fixed arity. Index order follows the ring's
/// variable declaration order (earlier variables are larger).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
  explicit Monomial(std::vector<int> exponents)
      : exponents_(std::move(exponents)) {}

  std::size_t arity() const { return exponents_.size(); }
  int exponent(std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }

  int degree() const;
  bool isConstant() const { return degree() == 0; }

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  /// Requires other | this.
  Monomial dividedBy(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

private:
  std::vector<int> exponents_;
};

enum class OrderKind { Lex, Grevlex, Elimination };

/// Total well-order on monomials of one arity. Elimination(k) compares
/// the leading k-variable block by grevlex first, so any monomial
/// touching that block beats every monomial supported on the tail.
class MonomialOrder {
public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::Grevlex, 0); }
  static MonomialOrder elimination(std::size_t firstBlockSize) {
    return MonomialOrder(OrderKind::Elimination, firstBlockSize);
  }

  OrderKind kind() const { return kind_; }
  std::size_t blockSize() const { return block_; }

  /// Three-way comparison: negative if a < b, zero iff equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }
  friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) {
    return !(a == b);
  }

private:
  MonomialOrder(OrderKind kind, std::size_t block) : kind_(kind), block_(block) {}

  OrderKind kind_;
  std::size_t block_;
};

}  // namespace hadamard

#endif
