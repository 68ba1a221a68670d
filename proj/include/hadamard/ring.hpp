#ifndef HADAMARD_RING_HPP
#define HADAMARD_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hadamard/monomial.hpp"

namespace hadamard {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// Ambient polynomial ring over Q: an ordered list of distinct variable
/// names plus the monomial order used for term sorting and printing.
/// Declaration order is the comparison order (earlier name = larger).
class RingContext {
public:
  /// Public factory. Rejects empty, duplicate, or reserved ('#'-prefixed)
  /// names with DomainError.
  static RingPtr create(std::vector<std::string> variables,
                        MonomialOrder order = MonomialOrder::grevlex());

  /// Factory for engine-built extension rings; permits '#'-prefixed names.
  static RingPtr createInternal(std::vector<std::string> variables,
                                MonomialOrder order);

  std::size_t arity() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variableName(std::size_t i) const { return variables_[i]; }
  std::optional<std::size_t> indexOf(const std::string& name) const;
  const MonomialOrder& order() const { return order_; }

  /// Same variables, different order.
  RingPtr withOrder(MonomialOrder order) const;

  /// Structural identity: same names in the same order, same monomial order.
  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.variables_ == b.variables_ && a.order_ == b.order_;
  }
  friend bool operator!=(const RingContext& a, const RingContext& b) {
    return !(a == b);
  }

  static bool sameRing(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
  }

  static constexpr char kReservedPrefix = '#';

private:
  RingContext(std::vector<std::string> variables, MonomialOrder order)
      : variables_(std::move(variables)), order_(order) {}

  std::vector<std::string> variables_;
  MonomialOrder order_;
};

}  // namespace hadamard

#endif
