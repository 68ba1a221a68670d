#include "hadamard/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hadamard {

int Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
  assert(arity() == other.arity());
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  assert(arity() == other.arity());
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::dividedBy(const Monomial& other) const {
  assert(other.divides(*this));
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  assert(a.arity() == b.arity());
  std::vector<int> e(a.exponents_);
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(e[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  assert(a.arity() == b.arity());
  for (std::size_t i = 0; i < a.exponents_.size(); ++i)
    if (a.exponents_[i] > 0 && b.exponents_[i] > 0) return false;
  return true;
}

namespace {

// Graded reverse lexicographic comparison restricted to [lo, hi).
// Ties on degree break at the last differing variable: the monomial
// with the smaller exponent there is the larger one.
int grevlexRange(const Monomial& a, const Monomial& b, std::size_t lo,
                 std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) > b.exponent(i) ? -1 : 1;
  }
  return 0;
}

int lexCompare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) < b.exponent(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  assert(a.arity() == b.arity());
  switch (kind_) {
    case OrderKind::Lex:
      return lexCompare(a, b);
    case OrderKind::Grevlex:
      return grevlexRange(a, b, 0, a.arity());
    case OrderKind::Elimination: {
      const std::size_t k = std::min(block_, a.arity());
      int c = grevlexRange(a, b, 0, k);
      if (c != 0) return c;
      return grevlexRange(a, b, k, a.arity());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::Elimination:
      return "eliminate(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace hadamard
