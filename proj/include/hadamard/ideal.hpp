#ifndef HADAMARD_IDEAL_HPP
#define HADAMARD_IDEAL_HPP

#include <vector>

#include "hadamard/polynomial.hpp"

namespace hadamard {

/// Finite generator list inside one ring. Generators are stored
/// canonicalized, with zeros and duplicates removed. Mathematical
/// equality is decided by idealEquals, never by the generator lists.
class Ideal {
public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool isZeroIdeal() const { return generators_.empty(); }

  /// True when every generator is homogeneous.
  bool isHomogeneous() const;

private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

}  // namespace hadamard

#endif
