#include "hadamard/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "hadamard/errors.hpp"

namespace hadamard {

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors) {
  for (const auto& d : divisors) {
    if (d.isZero())
      throw DomainError("zero-divisor", "division by a zero polynomial");
    requireSameRing(f, d);
  }
  const RingPtr& ring = f.ring();

  std::vector<std::vector<Term>> quotientTerms(divisors.size());
  std::vector<Term> remainderTerms;
  Polynomial p = f;
  while (!p.isZero()) {
    const Term& lt = p.leadingTerm();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& dlt = divisors[i].leadingTerm();
      if (!dlt.monomial.divides(lt.monomial)) continue;
      Monomial qm = lt.monomial.dividedBy(dlt.monomial);
      Rational qc = lt.coefficient / dlt.coefficient;
      p = p - divisors[i].timesTerm(qm, qc);
      quotientTerms[i].push_back({std::move(qm), std::move(qc)});
      reduced = true;
      break;
    }
    if (!reduced) {
      // leading monomials of p strictly decrease, so terms arrive sorted
      remainderTerms.push_back(lt);
      p = p - Polynomial::monomialTerm(ring, lt.monomial, lt.coefficient);
    }
  }

  DivisionResult result;
  result.quotients.reserve(divisors.size());
  for (auto& terms : quotientTerms)
    result.quotients.push_back(Polynomial::fromTerms(ring, std::move(terms)));
  result.remainder = Polynomial::fromTerms(ring, std::move(remainderTerms));
  return result;
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f, g);
  const Term& ltf = f.leadingTerm();
  const Term& ltg = g.leadingTerm();
  Monomial lcm = Monomial::lcm(ltf.monomial, ltg.monomial);
  Polynomial left =
      f.timesTerm(lcm.dividedBy(ltf.monomial), ltf.coefficient.inverse());
  Polynomial right =
      g.timesTerm(lcm.dividedBy(ltg.monomial), ltg.coefficient.inverse());
  return left - right;
}

bool GroebnerBasis::isUnitIdeal() const {
  return elements_.size() == 1 && elements_[0].isConstant() &&
         !elements_[0].isZero();
}

namespace {

struct PairEntry {
  int lcmDegree;
  Monomial lcm;
  std::size_t i, j;  // i < j
};

// Normal selection strategy: lowest lcm degree first, then the order on
// the lcm monomial, then indices. Total, hence deterministic.
struct PairSelect {
  MonomialOrder order;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.lcmDegree != b.lcmDegree) return a.lcmDegree < b.lcmDegree;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<Polynomial> uniqueCanonical(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    Polynomial c = canonicalize(g);
    if (std::find(out.begin(), out.end(), c) == out.end())
      out.push_back(std::move(c));
  }
  return out;
}

// Core loop over polynomials already living in the ring whose order the
// basis is computed under.
std::vector<Polynomial> buchbergerCore(const RingPtr& ring,
                                       const std::vector<Polynomial>& gens,
                                       const GroebnerOptions& opts) {
  std::vector<Polynomial> basis = uniqueCanonical(gens);
  if (basis.empty()) return basis;

  const MonomialOrder& order = ring->order();
  std::set<PairEntry, PairSelect> queue{PairSelect{order}};
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto pushPair = [&](std::size_t i, std::size_t j) {
    Monomial lcm = Monomial::lcm(basis[i].leadingMonomial(),
                                 basis[j].leadingMonomial());
    queue.insert({lcm.degree(), std::move(lcm), i, j});
    pending.insert({i, j});
  };

  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pushPair(i, j);

  std::uint64_t reductions = 0;
  while (!queue.empty()) {
    PairEntry pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});

    const Monomial& lmi = basis[pair.i].leadingMonomial();
    const Monomial& lmj = basis[pair.j].leadingMonomial();
    if (Monomial::coprime(lmi, lmj)) continue;

    // chain criterion: some lm(g_k) divides the lcm and both flanking
    // pairs have already been treated
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].leadingMonomial().divides(pair.lcm)) continue;
      auto ik = std::minmax(pair.i, k);
      auto jk = std::minmax(pair.j, k);
      if (!pending.count({ik.first, ik.second}) &&
          !pending.count({jk.first, jk.second}))
        skip = true;
    }
    if (skip) continue;

    if (++reductions > opts.pairReductionCap)
      throw BudgetError("pair-reduction budget of " +
                        std::to_string(opts.pairReductionCap) + " exceeded");

    Polynomial s = sPolynomial(basis[pair.i], basis[pair.j]);
    Polynomial r = divide(s, basis).remainder;
    if (r.isZero()) continue;
    basis.push_back(canonicalize(r));
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
      pushPair(i, basis.size() - 1);
  }

  // minimalize: drop elements whose leading monomial another one divides
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lmj = basis[j].leadingMonomial();
      const Monomial& lmi = basis[i].leadingMonomial();
      if (lmj.divides(lmi) && (lmj != lmi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // tail-reduce until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = others.empty() ? minimal[i]
                                    : divide(minimal[i], others).remainder;
      Polynomial c = canonicalize(r);
      if (!(c == minimal[i])) {
        changed = true;
        if (c.isZero()) {
          minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          minimal[i] = std::move(c);
        }
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leadingMonomial(), b.leadingMonomial());
            });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& opts) {
  return GroebnerBasis(ideal.ring(),
                       buchbergerCore(ideal.ring(), ideal.generators(), opts));
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& opts) {
  if (order == ideal.ring()->order()) return buchberger(ideal, opts);
  RingPtr variant = ideal.ring()->withOrder(order);
  std::vector<Polynomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(reorderTo(g, variant));
  return GroebnerBasis(variant, buchbergerCore(variant, gens, opts));
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis) {
  if (basis.elements().empty()) return f;
  Polynomial g = RingContext::sameRing(f.ring(), basis.ring())
                     ? f
                     : reorderTo(f, basis.ring());
  return divide(g, basis.elements()).remainder;
}

bool idealEquals(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
  if (!RingContext::sameRing(a.ring(), b.ring()))
    throw ContextError("ideal comparison across different rings");
  GroebnerBasis ga = buchberger(a, opts);
  GroebnerBasis gb = buchberger(b, opts);
  return ga.elements() == gb.elements();
}

bool idealMembership(const Polynomial& f, const Ideal& ideal,
                     const GroebnerOptions& opts) {
  if (!RingContext::sameRing(f.ring(), ideal.ring()))
    throw ContextError("membership test across different rings");
  if (f.isZero()) return true;
  return normalForm(f, buchberger(ideal, opts)).isZero();
}

namespace {

Monomial sliceExponents(const Monomial& m, std::size_t from, std::size_t to) {
  std::vector<int> e(m.exponents().begin() + static_cast<std::ptrdiff_t>(from),
                     m.exponents().begin() + static_cast<std::ptrdiff_t>(to));
  return Monomial(std::move(e));
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& dropIndices,
                const GroebnerOptions& opts,
                std::optional<MonomialOrder> resultOrder) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->arity();

  std::vector<bool> dropped(n, false);
  for (std::size_t idx : dropIndices) {
    if (idx >= n)
      throw ContextError("eliminate: variable index out of range");
    dropped[idx] = true;
  }

  MonomialOrder finalOrder = resultOrder.value_or(
      ring->order().kind() == OrderKind::Elimination ? MonomialOrder::grevlex()
                                                     : ring->order());

  std::vector<std::size_t> perm;  // permuted slot -> original index
  for (std::size_t i = 0; i < n; ++i)
    if (dropped[i]) perm.push_back(i);
  const std::size_t k = perm.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) perm.push_back(i);

  if (k == 0) {
    GroebnerBasis gb = buchberger(ideal, finalOrder, opts);
    RingPtr target = ring->withOrder(finalOrder);
    std::vector<Polynomial> gens;
    for (const auto& g : gb.elements()) gens.push_back(reorderTo(g, target));
    return Ideal(target, std::move(gens));
  }

  std::vector<std::string> permNames;
  permNames.reserve(n);
  for (std::size_t slot : perm) permNames.push_back(ring->variableName(slot));
  RingPtr extRing = RingContext::createInternal(
      std::move(permNames), MonomialOrder::elimination(k));

  std::vector<Polynomial> extGens;
  extGens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    std::vector<Term> terms;
    terms.reserve(g.terms().size());
    for (const auto& t : g.terms()) {
      std::vector<int> e(n);
      for (std::size_t slot = 0; slot < n; ++slot)
        e[slot] = t.monomial.exponent(perm[slot]);
      terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    extGens.push_back(Polynomial::fromTerms(extRing, std::move(terms)));
  }

  GroebnerBasis gb(extRing, buchbergerCore(extRing, extGens, opts));

  std::vector<std::string> keptNames;
  for (std::size_t slot = k; slot < n; ++slot)
    keptNames.push_back(extRing->variableName(slot));
  RingPtr smallRing = RingContext::createInternal(std::move(keptNames),
                                                  finalOrder);

  std::vector<Polynomial> survivors;
  for (const auto& g : gb.elements()) {
    bool usesDropped = false;
    for (const auto& t : g.terms()) {
      for (std::size_t slot = 0; slot < k && !usesDropped; ++slot)
        if (t.monomial.exponent(slot) > 0) usesDropped = true;
      if (usesDropped) break;
    }
    if (usesDropped) continue;
    std::vector<Term> terms;
    terms.reserve(g.terms().size());
    for (const auto& t : g.terms())
      terms.push_back({sliceExponents(t.monomial, k, n), t.coefficient});
    survivors.push_back(Polynomial::fromTerms(smallRing, std::move(terms)));
  }
  return Ideal(smallRing, std::move(survivors));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& dropNames,
                const GroebnerOptions& opts) {
  std::vector<std::size_t> indices;
  indices.reserve(dropNames.size());
  for (const auto& name : dropNames) {
    auto idx = ideal.ring()->indexOf(name);
    if (!idx)
      throw ContextError("eliminate: unknown variable '" + name + "'");
    indices.push_back(*idx);
  }
  return eliminate(ideal, indices, opts);
}

Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
  if (!RingContext::sameRing(a.ring(), b.ring()))
    throw ContextError("ideal intersection across different rings");
  const RingPtr& ring = a.ring();
  const std::size_t n = ring->arity();

  std::vector<std::string> extNames;
  extNames.reserve(n + 1);
  extNames.emplace_back(1, RingContext::kReservedPrefix);
  extNames.back() += "t";
  for (const auto& v : ring->variables()) extNames.push_back(v);
  RingPtr extRing = RingContext::createInternal(std::move(extNames),
                                                MonomialOrder::elimination(1));

  auto lift = [&](const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
      std::vector<int> e(n + 1, 0);
      for (std::size_t i = 0; i < n; ++i) e[i + 1] = t.monomial.exponent(i);
      terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    return Polynomial::fromTerms(extRing, std::move(terms));
  };

  Polynomial t = Polynomial::variable(extRing, 0);
  Polynomial oneMinusT = Polynomial::one(extRing) - t;
  std::vector<Polynomial> extGens;
  for (const auto& f : a.generators()) extGens.push_back(t * lift(f));
  for (const auto& g : b.generators()) extGens.push_back(oneMinusT * lift(g));

  Ideal extIdeal(extRing, std::move(extGens));
  Ideal small = eliminate(extIdeal, std::vector<std::size_t>{0}, opts,
                          ring->order());

  // hand the generators back to the caller's ring instance
  std::vector<Polynomial> gens;
  gens.reserve(small.generators().size());
  for (const auto& g : small.generators()) {
    std::vector<Term> terms(g.terms());
    gens.push_back(Polynomial::fromTerms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(gens));
}

Ideal ringMapKernel(const Ideal& domainRelations,
                    const std::vector<Polynomial>& targets,
                    const RingPtr& resultRing, const GroebnerOptions& opts) {
  const RingPtr& domainRing = domainRelations.ring();
  const std::size_t n = domainRing->arity();
  const std::size_t m = resultRing->arity();
  if (targets.size() != m)
    throw ContextError("ring map needs one target per result variable, got " +
                       std::to_string(targets.size()) + " for " +
                       std::to_string(m));
  for (const auto& f : targets)
    if (!RingContext::sameRing(f.ring(), domainRing))
      throw ContextError("ring map target lives outside the domain ring");

  std::vector<std::string> extNames;
  extNames.reserve(n + m);
  for (std::size_t i = 0; i < n; ++i)
    extNames.push_back(std::string(1, RingContext::kReservedPrefix) + "d" +
                       std::to_string(i));
  for (const auto& v : resultRing->variables()) extNames.push_back(v);
  RingPtr extRing = RingContext::createInternal(std::move(extNames),
                                                MonomialOrder::elimination(n));

  auto lift = [&](const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
      std::vector<int> e(n + m, 0);
      for (std::size_t i = 0; i < n; ++i) e[i] = t.monomial.exponent(i);
      terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    return Polynomial::fromTerms(extRing, std::move(terms));
  };

  std::vector<Polynomial> extGens;
  for (const auto& q : domainRelations.generators()) extGens.push_back(lift(q));
  for (std::size_t i = 0; i < m; ++i)
    extGens.push_back(Polynomial::variable(extRing, n + i) - lift(targets[i]));

  std::vector<std::size_t> drop(n);
  for (std::size_t i = 0; i < n; ++i) drop[i] = i;
  Ideal small = eliminate(Ideal(extRing, std::move(extGens)), drop, opts,
                          resultRing->order());

  std::vector<Polynomial> gens;
  gens.reserve(small.generators().size());
  for (const auto& g : small.generators()) {
    std::vector<Term> terms(g.terms());
    gens.push_back(Polynomial::fromTerms(resultRing, std::move(terms)));
  }
  return Ideal(resultRing, std::move(gens));
}

}  // namespace hadamard
