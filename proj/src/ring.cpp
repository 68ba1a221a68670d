#include "hadamard/ring.hpp"

#include <unordered_set>

#include "hadamard/errors.hpp"

namespace hadamard {

namespace {

void validateNames(const std::vector<std::string>& names, bool allowReserved) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty())
      throw DomainError("invalid-variable", "empty variable name");
    if (!allowReserved && n.front() == RingContext::kReservedPrefix)
      throw DomainError("invalid-variable",
                        "variable name '" + n + "' uses the reserved prefix '" +
                            std::string(1, RingContext::kReservedPrefix) + "'");
    if (!seen.insert(n).second)
      throw DomainError("invalid-variable", "duplicate variable name '" + n + "'");
  }
}

}  // namespace

RingPtr RingContext::create(std::vector<std::string> variables,
                            MonomialOrder order) {
  validateNames(variables, /*allowReserved=*/false);
  return RingPtr(new RingContext(std::move(variables), order));
}

RingPtr RingContext::createInternal(std::vector<std::string> variables,
                                    MonomialOrder order) {
  validateNames(variables, /*allowReserved=*/true);
  return RingPtr(new RingContext(std::move(variables), order));
}

std::optional<std::size_t> RingContext::indexOf(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

RingPtr RingContext::withOrder(MonomialOrder order) const {
  return RingPtr(new RingContext(variables_, order));
}

}  // namespace hadamard
