#ifndef HADAMARD_POLYNOMIAL_HPP
#define HADAMARD_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "hadamard/monomial.hpp"
#include "hadamard/rational.hpp"
#include "hadamard/ring.hpp"

namespace hadamard {

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted in
/// descending ring order with no zero coefficients, so the leading term
/// is terms().front() and rendering is deterministic. Immutable in use:
/// all operations return new values.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomialTerm(RingPtr ring, Monomial m, Rational c);
  /// Normalizes arbitrary term lists: merges equal monomials, drops zeros.
  static Polynomial fromTerms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;

  /// Leading term under the ring's order. Throws DomainError on zero.
  const Term& leadingTerm() const;
  const Monomial& leadingMonomial() const { return leadingTerm().monomial; }

  /// Max total degree across terms; -1 for the zero polynomial.
  int totalDegree() const;
  /// True when all terms share one total degree (zero counts as homogeneous).
  bool isHomogeneous() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial timesTerm(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  /// Exact value at a coordinate vector (length = ring arity).
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Ring-homomorphic substitution: variable i is replaced by values[i].
  /// All values must share one ring.
  Polynomial substitute(const std::vector<Polynomial>& values) const;

  /// Canonical text: terms descending, '^' powers, '*' between variables,
  /// numeric coefficient juxtaposed: "6x^2 - 9x*y + 3y^2".
  std::string str() const;

private:
  Polynomial(RingPtr ring, std::vector<Term> sortedTerms)
      : ring_(std::move(ring)), terms_(std::move(sortedTerms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Scales f by the unique positive rational making the coefficients
/// integral with content 1, then flips the sign if needed so the leading
/// coefficient is positive. Zero maps to zero.
Polynomial canonicalize(const Polynomial& f);

/// Rebuilds f in `target`, which must have the same variable names
/// (possibly a different order kind); terms are re-sorted.
Polynomial reorderTo(const Polynomial& f, const RingPtr& target);

/// Throws ContextError unless both polynomials live in the same ring.
void requireSameRing(const Polynomial& a, const Polynomial& b);

}  // namespace hadamard

#endif
