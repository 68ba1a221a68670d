#ifndef HADAMARD_RENDER_HPP
#define HADAMARD_RENDER_HPP

#include <string>

#include "hadamard/ideal.hpp"
#include "hadamard/point.hpp"

namespace hadamard {

/// "ideal(g1, g2, ...)" with canonicalized generators sorted by total
/// degree, then ascending leading monomial. The zero ideal is "ideal(0)".
std::string renderIdeal(const Ideal& ideal);

/// "{Point{...}, Point{...}}".
std::string renderPointList(const PointList& points);

}  // namespace hadamard

#endif
