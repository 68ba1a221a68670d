#include "hadamard/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hadamard {

Rational::Rational(long n, long d) : value_(n, d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(BigInt n, BigInt d) {
  if (sgn(d) == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(std::move(n), std::move(d));
  value_.canonicalize();
}

Rational Rational::fromString(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(std::move(num), std::move(den));
  } catch (const std::domain_error&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(unsigned long e) const {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), value_.get_den_mpz_t(), e);
  return Rational(std::move(out));  // powers of a canonical fraction stay canonical
}

Rational Rational::inverse() const {
  if (isZero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

std::string Rational::str() const {
  if (isInteger()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace hadamard
