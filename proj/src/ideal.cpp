#include "hadamard/ideal.hpp"

#include "hadamard/errors.hpp"

namespace hadamard {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    if (!RingContext::sameRing(g.ring(), ring_))
      throw ContextError("ideal generator lives in a different ring");
    if (g.isZero()) continue;
    Polynomial c = canonicalize(g);
    bool duplicate = false;
    for (const auto& have : generators_)
      if (have == c) {
        duplicate = true;
        break;
      }
    if (!duplicate) generators_.push_back(std::move(c));
  }
}

bool Ideal::isHomogeneous() const {
  for (const auto& g : generators_)
    if (!g.isHomogeneous()) return false;
  return true;
}

}  // namespace hadamard
