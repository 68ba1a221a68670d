#ifndef HADAMARD_POINT_HPP
#define HADAMARD_POINT_HPP

#include <string>
#include <vector>

#include "hadamard/rational.hpp"

namespace hadamard {

/// Point of projective space with exact rational coordinates, stored as
/// the canonical representative: the first nonzero coordinate is 1.
/// Construction rejects the zero vector.
class ProjectivePoint {
public:
  explicit ProjectivePoint(std::vector<Rational> coordinates);

  std::size_t arity() const { return coordinates_.size(); }
  const std::vector<Rational>& coordinates() const { return coordinates_; }
  const Rational& coordinate(std::size_t i) const { return coordinates_[i]; }

  /// "Point{1, -4, -15}".
  std::string str() const;

  /// Canonical representatives make projective equality coordinate-wise.
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coordinates_ == b.coordinates_;
  }
  friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) {
    return !(a == b);
  }
  /// Lexicographic order on normalized coordinates; used for deterministic
  /// output ordering of point sets.
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

private:
  std::vector<Rational> coordinates_;
};

using PointList = std::vector<ProjectivePoint>;

}  // namespace hadamard

#endif
