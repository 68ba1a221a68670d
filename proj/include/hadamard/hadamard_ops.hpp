#ifndef HADAMARD_HADAMARD_OPS_HPP
#define HADAMARD_HADAMARD_OPS_HPP

#include "hadamard/groebner.hpp"
#include "hadamard/ideal.hpp"
#include "hadamard/point.hpp"

namespace hadamard {

/// Entry-wise star product [x0*y0 : ... : xn*yn]. Throws DomainError
/// ("undefined-product") when every entry vanishes.
ProjectivePoint pointHadamard(const ProjectivePoint& x,
                              const ProjectivePoint& y);

/// Projective equality (equality up to a global nonzero scalar).
bool pointEquals(const ProjectivePoint& x, const ProjectivePoint& y);

/// Vanishing ideal of the Zariski closure of X * Y, computed as the
/// kernel of w_i -> x_i y_i over R/I (x) T/J. Both ideals must be
/// homogeneous and of equal arity; the result lives in a's ring.
Ideal hadamardProductIdeals(const Ideal& a, const Ideal& b,
                            const GroebnerOptions& opts = {});

/// All defined pairwise star products of L x M, projectively deduplicated
/// and sorted by normalized coordinates. Undefined pairs are skipped.
PointList hadamardProductPoints(const PointList& left, const PointList& right);

/// Left folds of the binary products over a nonempty list.
Ideal hadamardProductList(const std::vector<Ideal>& items,
                          const GroebnerOptions& opts = {});
PointList hadamardProductList(const std::vector<PointList>& items);
ProjectivePoint hadamardProductList(const std::vector<ProjectivePoint>& items);

/// r-th Hadamard power, r >= 1: X^[1] = X, X^[r] = X * X^[r-1].
Ideal hadamardPowerIdeal(const Ideal& ideal, int r,
                         const GroebnerOptions& opts = {});
PointList hadamardPowerPoints(const PointList& points, int r);

/// Vanishing ideal of one point: the n independent linear forms
/// p_i0 * v_j - p_j * v_i0 (i0 = first nonzero coordinate), returned as
/// the reduced basis.
Ideal singlePointIdeal(const ProjectivePoint& point, const RingPtr& ring,
                       const GroebnerOptions& opts = {});

/// Vanishing ideal of a finite point set: intersection of the
/// single-point ideals of the projectively distinct members.
Ideal idealOfProjectivePoints(const PointList& points, const RingPtr& ring,
                              const GroebnerOptions& opts = {});

}  // namespace hadamard

#endif
