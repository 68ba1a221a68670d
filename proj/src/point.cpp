#include "hadamard/point.hpp"

#include <sstream>

#include "hadamard/errors.hpp"

namespace hadamard {

ProjectivePoint::ProjectivePoint(std::vector<Rational> coordinates)
    : coordinates_(std::move(coordinates)) {
  if (coordinates_.empty())
    throw DomainError("invalid-projective-point",
                      "projective point needs at least one coordinate");
  const Rational* pivot = nullptr;
  for (const auto& c : coordinates_)
    if (!c.isZero()) {
      pivot = &c;
      break;
    }
  if (pivot == nullptr)
    throw DomainError("invalid-projective-point",
                      "all coordinates are zero");
  if (!pivot->isOne()) {
    Rational inv = pivot->inverse();
    for (auto& c : coordinates_) c *= inv;
  }
}

std::string ProjectivePoint::str() const {
  std::ostringstream os;
  os << "Point{";
  for (std::size_t i = 0; i < coordinates_.size(); ++i) {
    if (i > 0) os << ", ";
    os << coordinates_[i].str();
  }
  os << "}";
  return os.str();
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
  const std::size_t n = std::min(a.arity(), b.arity());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coordinates_[i] != b.coordinates_[i])
      return a.coordinates_[i] < b.coordinates_[i];
  }
  return a.arity() < b.arity();
}

}  // namespace hadamard
