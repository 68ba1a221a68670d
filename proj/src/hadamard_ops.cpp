#include "hadamard/hadamard_ops.hpp"

#include <algorithm>
#include <optional>

#include "hadamard/errors.hpp"

namespace hadamard {

namespace {

void requireSameArity(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw ContextError(std::string(what) + ": arity " + std::to_string(a) +
                       " vs " + std::to_string(b));
}

std::optional<ProjectivePoint> tryPointHadamard(const ProjectivePoint& x,
                                                const ProjectivePoint& y) {
  requireSameArity(x.arity(), y.arity(), "point star product");
  std::vector<Rational> prod;
  prod.reserve(x.arity());
  bool anyNonzero = false;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    prod.push_back(x.coordinate(i) * y.coordinate(i));
    if (!prod.back().isZero()) anyNonzero = true;
  }
  if (!anyNonzero) return std::nullopt;
  return ProjectivePoint(std::move(prod));
}

void requireHomogeneous(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (!g.isHomogeneous())
      throw DomainError("non-homogeneous",
                        "Hadamard operations need homogeneous generators; '" +
                            g.str() + "' is not");
}

PointList dedupSorted(PointList points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace

ProjectivePoint pointHadamard(const ProjectivePoint& x,
                              const ProjectivePoint& y) {
  auto p = tryPointHadamard(x, y);
  if (!p)
    throw DomainError("undefined-product",
                      "star product " + x.str() + " * " + y.str() +
                          " has all coordinates zero");
  return *std::move(p);
}

bool pointEquals(const ProjectivePoint& x, const ProjectivePoint& y) {
  requireSameArity(x.arity(), y.arity(), "point comparison");
  return x == y;  // canonical representatives
}

Ideal hadamardProductIdeals(const Ideal& a, const Ideal& b,
                            const GroebnerOptions& opts) {
  requireSameArity(a.ring()->arity(), b.ring()->arity(),
                   "ideal Hadamard product");
  requireHomogeneous(a);
  requireHomogeneous(b);

  const std::size_t n = a.ring()->arity();
  std::vector<std::string> domainNames;
  domainNames.reserve(2 * n);
  const std::string prefix(1, RingContext::kReservedPrefix);
  for (std::size_t i = 0; i < n; ++i)
    domainNames.push_back(prefix + "x" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    domainNames.push_back(prefix + "y" + std::to_string(i));
  RingPtr domain = RingContext::createInternal(std::move(domainNames),
                                               MonomialOrder::grevlex());

  auto embed = [&](const Polynomial& f, std::size_t offset) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
      std::vector<int> e(2 * n, 0);
      for (std::size_t i = 0; i < n; ++i)
        e[offset + i] = t.monomial.exponent(i);
      terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    return Polynomial::fromTerms(domain, std::move(terms));
  };

  std::vector<Polynomial> relations;
  for (const auto& f : a.generators()) relations.push_back(embed(f, 0));
  for (const auto& g : b.generators()) relations.push_back(embed(g, n));

  std::vector<Polynomial> targets;
  targets.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    targets.push_back(Polynomial::variable(domain, i) *
                      Polynomial::variable(domain, n + i));

  return ringMapKernel(Ideal(domain, std::move(relations)), targets, a.ring(),
                       opts);
}

PointList hadamardProductPoints(const PointList& left,
                                const PointList& right) {
  PointList out;
  for (const auto& x : left)
    for (const auto& y : right)
      if (auto p = tryPointHadamard(x, y)) out.push_back(*std::move(p));
  return dedupSorted(std::move(out));
}

Ideal hadamardProductList(const std::vector<Ideal>& items,
                          const GroebnerOptions& opts) {
  if (items.empty())
    throw DomainError("empty-list", "Hadamard product of an empty list");
  Ideal acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i)
    acc = hadamardProductIdeals(acc, items[i], opts);
  return acc;
}

PointList hadamardProductList(const std::vector<PointList>& items) {
  if (items.empty())
    throw DomainError("empty-list", "Hadamard product of an empty list");
  PointList acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i)
    acc = hadamardProductPoints(acc, items[i]);
  return acc;
}

ProjectivePoint hadamardProductList(const std::vector<ProjectivePoint>& items) {
  if (items.empty())
    throw DomainError("empty-list", "Hadamard product of an empty list");
  ProjectivePoint acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i)
    acc = pointHadamard(acc, items[i]);
  return acc;
}

Ideal hadamardPowerIdeal(const Ideal& ideal, int r,
                         const GroebnerOptions& opts) {
  if (r < 1)
    throw DomainError("invalid-power",
                      "Hadamard power needs r >= 1, got " + std::to_string(r));
  Ideal acc = ideal;
  for (int i = 1; i < r; ++i) acc = hadamardProductIdeals(acc, ideal, opts);
  return acc;
}

PointList hadamardPowerPoints(const PointList& points, int r) {
  if (r < 1)
    throw DomainError("invalid-power",
                      "Hadamard power needs r >= 1, got " + std::to_string(r));
  PointList acc = points;
  for (int i = 1; i < r; ++i) acc = hadamardProductPoints(acc, points);
  return acc;
}

Ideal singlePointIdeal(const ProjectivePoint& point, const RingPtr& ring,
                       const GroebnerOptions& opts) {
  requireSameArity(ring->arity(), point.arity(), "single point ideal");
  std::size_t pivot = 0;
  while (point.coordinate(pivot).isZero()) ++pivot;  // some coordinate is nonzero

  std::vector<Polynomial> gens;
  gens.reserve(ring->arity() - 1);
  for (std::size_t j = 0; j < ring->arity(); ++j) {
    if (j == pivot) continue;
    Polynomial form =
        Polynomial::variable(ring, j).scaled(point.coordinate(pivot)) -
        Polynomial::variable(ring, pivot).scaled(point.coordinate(j));
    gens.push_back(std::move(form));
  }
  GroebnerBasis gb = buchberger(Ideal(ring, std::move(gens)), opts);
  std::vector<Polynomial> reduced;
  for (const auto& g : gb.elements()) {
    std::vector<Term> terms(g.terms());
    reduced.push_back(Polynomial::fromTerms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(reduced));
}

Ideal idealOfProjectivePoints(const PointList& points, const RingPtr& ring,
                              const GroebnerOptions& opts) {
  if (points.empty())
    throw DomainError("empty-list", "vanishing ideal of an empty point list");

  PointList distinct;
  for (const auto& p : points)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end())
      distinct.push_back(p);

  Ideal acc = singlePointIdeal(distinct.front(), ring, opts);
  for (std::size_t i = 1; i < distinct.size(); ++i)
    acc = intersect(acc, singlePointIdeal(distinct[i], ring, opts), opts);
  return acc;
}

}  // namespace hadamard
