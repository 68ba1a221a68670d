#include "hadamard/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hadamard/errors.hpp"

namespace hadamard {

namespace {

struct DescendingOrder {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order.greater(a, b);
  }
};

void checkArity(const RingPtr& ring, const Monomial& m) {
  if (m.arity() != ring->arity())
    throw ContextError("monomial arity " + std::to_string(m.arity()) +
                       " does not match ring arity " +
                       std::to_string(ring->arity()));
}

}  // namespace

void requireSameRing(const Polynomial& a, const Polynomial& b) {
  if (!RingContext::sameRing(a.ring(), b.ring()))
    throw ContextError("polynomials live in different rings");
}

Polynomial Polynomial::zero(RingPtr ring) {
  return Polynomial(std::move(ring), {});
}

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  if (c.isZero()) return zero(std::move(ring));
  Monomial m(ring->arity());
  std::vector<Term> t;
  t.push_back({std::move(m), std::move(c)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  std::vector<int> e(ring->arity(), 0);
  e.at(index) = 1;
  std::vector<Term> t;
  t.push_back({Monomial(std::move(e)), Rational(1)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::monomialTerm(RingPtr ring, Monomial m, Rational c) {
  checkArity(ring, m);
  if (c.isZero()) return zero(std::move(ring));
  std::vector<Term> t;
  t.push_back({std::move(m), std::move(c)});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::fromTerms(RingPtr ring, std::vector<Term> terms) {
  std::map<Monomial, Rational, DescendingOrder> acc{
      DescendingOrder{ring->order()}};
  for (auto& t : terms) {
    checkArity(ring, t.monomial);
    auto [it, inserted] = acc.try_emplace(std::move(t.monomial),
                                          std::move(t.coefficient));
    if (!inserted) it->second += t.coefficient;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.isZero()) out.push_back({m, c});
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.isConstant());
}

const Term& Polynomial::leadingTerm() const {
  if (terms_.empty())
    throw DomainError("zero-leading-term",
                      "the zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::totalDegree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::isHomogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().monomial.degree();
  for (const auto& t : terms_)
    if (t.monomial.degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t(terms_);
  for (auto& term : t) term.coefficient = -term.coefficient;
  return Polynomial(ring_, std::move(t));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  const MonomialOrder& order = a.ring_->order();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = order.compare(a.terms_[i].monomial, b.terms_[j].monomial);
    if (c > 0) {
      out.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      Rational sum = a.terms_[i].coefficient + b.terms_[j].coefficient;
      if (!sum.isZero()) out.push_back({a.terms_[i].monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
  return Polynomial(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  std::map<Monomial, Rational, DescendingOrder> acc{
      DescendingOrder{a.ring_->order()}};
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = ta.monomial.times(tb.monomial);
      Rational c = ta.coefficient * tb.coefficient;
      auto [it, inserted] = acc.try_emplace(std::move(m), std::move(c));
      if (!inserted) it->second += c;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.isZero()) out.push_back({m, c});
  return Polynomial(a.ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.isZero()) return zero(ring_);
  std::vector<Term> t(terms_);
  for (auto& term : t) term.coefficient *= c;
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::timesTerm(const Monomial& m, const Rational& c) const {
  checkArity(ring_, m);
  if (c.isZero()) return zero(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_)
    t.push_back({term.monomial.times(m), term.coefficient * c});
  // multiplying by one monomial preserves the descending term order
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = one(ring_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!RingContext::sameRing(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  }
  return true;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->arity())
    throw ContextError("evaluation point arity " + std::to_string(point.size()) +
                       " does not match ring arity " +
                       std::to_string(ring_->arity()));
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational prod = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      int e = t.monomial.exponent(i);
      if (e > 0) prod *= point[i].pow(static_cast<unsigned long>(e));
    }
    sum += prod;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
  if (values.size() != ring_->arity())
    throw ContextError("substitution needs one value per variable");
  for (std::size_t i = 1; i < values.size(); ++i)
    requireSameRing(values[0], values[i]);
  RingPtr target = values.empty() ? ring_ : values[0].ring();
  Polynomial sum = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < values.size(); ++i) {
      int e = t.monomial.exponent(i);
      if (e > 0) prod = prod * values[i].pow(static_cast<unsigned>(e));
    }
    sum = sum + prod;
  }
  return sum;
}

Polynomial canonicalize(const Polynomial& f) {
  if (f.isZero()) return f;
  // lcm of denominators over gcd of numerators, sign from the leading term
  BigInt denLcm(1), numGcd(0);
  for (const auto& t : f.terms()) {
    mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(),
            t.coefficient.denominator().get_mpz_t());
    mpz_gcd(numGcd.get_mpz_t(), numGcd.get_mpz_t(),
            t.coefficient.numerator().get_mpz_t());
  }
  Rational scale(denLcm, numGcd);
  if (f.leadingTerm().coefficient.sign() < 0) scale = -scale;
  return f.scaled(scale);
}

Polynomial reorderTo(const Polynomial& f, const RingPtr& target) {
  if (f.ring()->variables() != target->variables())
    throw ContextError("reorderTo requires identical variable lists");
  std::vector<Term> terms(f.terms());
  return Polynomial::fromTerms(target, std::move(terms));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Rational c = t.coefficient;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational a = c.abs();
    if (t.monomial.isConstant()) {
      os << a.str();
      continue;
    }
    if (!a.isOne()) os << a.str();
    bool firstVar = true;
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      int e = t.monomial.exponent(i);
      if (e == 0) continue;
      if (!firstVar) os << "*";
      os << ring_->variableName(i);
      if (e > 1) os << "^" << e;
      firstVar = false;
    }
  }
  return os.str();
}

}  // namespace hadamard
