#ifndef HADAMARD_PARSER_HPP
#define HADAMARD_PARSER_HPP

#include <string>
#include <vector>

#include "hadamard/point.hpp"
#include "hadamard/polynomial.hpp"

namespace hadamard {

/// Parses one polynomial expression against a declared ring.
/// Grammar: signed rational literals ("2", "1/2"), ring variables,
/// + - * ^ and parentheses; '^' binds tighter than '*' binds tighter
/// than +/-; a numeric literal directly before a variable multiplies
/// ("3x"), but two adjacent variables are a syntax error ("x*y" required).
/// Errors are positioned ParseErrors.
Polynomial parsePolynomial(const std::string& text, const RingPtr& ring);

/// Comma-separated list of polynomial expressions, e.g. "x-y+z, z+y+w".
std::vector<Polynomial> parseGeneratorList(const std::string& text,
                                           const RingPtr& ring);

/// Point literal "{1,2,3}" or "[-1,2,5]"; entries are signed rationals.
/// The zero vector raises DomainError("invalid-projective-point").
ProjectivePoint parsePoint(const std::string& text);

/// "{{1,2},{0,1}}" (or a single point literal) -> list of points.
PointList parsePointList(const std::string& text);

}  // namespace hadamard

#endif
