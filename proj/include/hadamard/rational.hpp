#ifndef HADAMARD_RATIONAL_HPP
#define HADAMARD_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace hadamard {

using BigInt = mpz_class;

/// Exact arbitrary-precision rational. Always stored canonically:
/// denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}               // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(BigInt n, BigInt d);
  explicit Rational(BigInt n) : value_(std::move(n)) {}

  /// Parses "123" or "-4/6" (reduced on construction). Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Rational fromString(const std::string& text);

  const BigInt numerator() const { return value_.get_num(); }
  const BigInt denominator() const { return value_.get_den(); }

  bool isZero() const { return sgn(value_) == 0; }
  bool isOne() const { return value_ == 1; }
  bool isInteger() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Division by zero throws std::domain_error.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  Rational abs() const;
  /// Integer power; e >= 0.
  Rational pow(unsigned long e) const;
  Rational inverse() const;

  /// "3", "-3", "1/2", "-5/7".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

}  // namespace hadamard

#endif
