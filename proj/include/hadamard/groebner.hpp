#ifndef HADAMARD_GROEBNER_HPP
#define HADAMARD_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hadamard/ideal.hpp"
#include "hadamard/polynomial.hpp"

namespace hadamard {

/// Cap on S-pair reductions per basis computation; exceeding it raises
/// BudgetError instead of hanging on adversarial input.
struct GroebnerOptions {
  std::uint64_t pairReductionCap = 1'000'000;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;  // aligned with the divisor list
  Polynomial remainder;
};

/// Multivariate division under the ring's order: f = sum q_i g_i + r,
/// no monomial of r divisible by any leading monomial of the divisors,
/// and lm(q_i g_i) <= lm(f). Divisors are tried first-match-first.
DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors);

/// S(f, g) = (lcm/lt f) f - (lcm/lt g) g; the canonical cancellation.
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g);

/// The unique reduced Groebner basis of an ideal: elements are
/// canonicalized (primitive integer, positive leading coefficient),
/// pairwise tail-reduced, sorted by ascending leading monomial.
class GroebnerBasis {
public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool isZeroIdeal() const { return elements_.empty(); }
  bool isUnitIdeal() const;

private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// Buchberger's algorithm with normal pair selection (minimal lcm degree
/// first) and the coprimality and chain criteria, under the ideal ring's
/// own order.
GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& opts = {});

/// Same, under a different order: elements live in a variant of the
/// ideal's ring carrying that order.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& opts = {});

/// Unique remainder of f modulo the basis; zero iff f is in the ideal.
Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis);

/// Mathematical ideal equality: reduced bases coincide.
bool idealEquals(const Ideal& a, const Ideal& b,
                 const GroebnerOptions& opts = {});

bool idealMembership(const Polynomial& f, const Ideal& ideal,
                     const GroebnerOptions& opts = {});

/// Elimination ideal I n K[kept variables], computed with a block order
/// that puts the dropped variables first. The result lives in the smaller
/// ring (kept names, original declaration order) and its generators are
/// the reduced basis of the elimination ideal.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& dropIndices,
                const GroebnerOptions& opts = {},
                std::optional<MonomialOrder> resultOrder = std::nullopt);
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& dropNames,
                const GroebnerOptions& opts = {});

/// I n J via the auxiliary variable t: eliminate t from t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b,
                const GroebnerOptions& opts = {});

/// Kernel of the ring map resultRing -> domain/Q sending the i-th result
/// variable to targets[i]: extend, add w_i - target_i, eliminate the
/// domain block, reinterpret in resultRing.
Ideal ringMapKernel(const Ideal& domainRelations,
                    const std::vector<Polynomial>& targets,
                    const RingPtr& resultRing,
                    const GroebnerOptions& opts = {});

}  // namespace hadamard

#endif
