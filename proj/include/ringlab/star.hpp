#pragma once

/**
 * @file star.hpp
 * @brief Involutions, projections and the constructive projection lemmas.
 *
 * An involution is stored as an explicit permutation of element indices and
 * is only ever obtained through validate_involution(), which checks
 *
 *   (x + y)* = x* + y*,   (xy)* = y* x*,   (x*)* = x
 *
 * over every pair. The constructive operations (lemma1_projection,
 * lemma2_projection, lift_projection) build a projection from an idempotent
 * and re-check every identity the construction relies on. A failed check
 * throws CertificateFailure, never returns a wrong element.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/core_ring.hpp"

namespace ringlab {

class StarRing;
StarRing validate_involution(const FiniteRing& R, const std::vector<std::uint32_t>& map,
                             std::string label = "table");

class Involution {
 public:
  Element operator()(Element a) const { return Element{map_[a.index]}; }
  const std::vector<std::uint32_t>& map() const noexcept { return map_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Involution(std::vector<std::uint32_t> map, std::string label)
      : map_(std::move(map)), label_(std::move(label)) {}
  friend StarRing validate_involution(const FiniteRing&, const std::vector<std::uint32_t>&,
                                      std::string);

  std::vector<std::uint32_t> map_;
  std::string label_;
};

/// A FiniteRing paired with a validated involution.
class StarRing {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  const Involution& involution() const noexcept { return inv_; }
  Element star(Element a) const { return inv_(a); }
  std::string label() const { return ring_.label() + "|" + inv_.label(); }

 private:
  StarRing(FiniteRing ring, Involution inv) : ring_(std::move(ring)), inv_(std::move(inv)) {}
  friend StarRing validate_involution(const FiniteRing&, const std::vector<std::uint32_t>&,
                                      std::string);

  FiniteRing ring_;
  Involution inv_;
};

/// Checks the involution axioms exhaustively. Throws AxiomViolation naming
/// the first failing axiom (bijection, fixes-zero, additive, self-inverse,
/// anti-multiplicative, fixes-one) with witness indices.
inline StarRing validate_involution(const FiniteRing& R, const std::vector<std::uint32_t>& map,
                                    std::string label) {
  const auto n = static_cast<std::uint32_t>(R.order());
  if (map.size() != n) throw AxiomViolation("bijection", {static_cast<std::uint32_t>(map.size())});
  std::vector<bool> hit(n, false);
  for (std::uint32_t a = 0; a < n; ++a) {
    if (map[a] >= n || hit[map[a]]) throw AxiomViolation("bijection", {a});
    hit[map[a]] = true;
  }
  auto S = [&](Element a) { return Element{map[a.index]}; };
  if (S(R.zero()) != R.zero()) throw AxiomViolation("fixes-zero", {R.zero().index});
  for (auto x : R.elements())
    for (auto y : R.elements())
      if (S(R.add(x, y)) != R.add(S(x), S(y))) throw AxiomViolation("additive", {x.index, y.index});
  for (auto x : R.elements())
    if (S(S(x)) != x) throw AxiomViolation("self-inverse", {x.index});
  for (auto x : R.elements())
    for (auto y : R.elements())
      if (S(R.mul(x, y)) != R.mul(S(y), S(x)))
        throw AxiomViolation("anti-multiplicative", {x.index, y.index});
  if (S(R.one()) != R.one()) throw AxiomViolation("fixes-one", {R.one().index});
  return StarRing(R, Involution(map, std::move(label)));
}

inline Element star(const StarRing& S, Element a) { return S.star(a); }

inline bool is_projection(const StarRing& S, Element e) {
  return is_idempotent(S.ring(), e) && S.star(e) == e;
}

inline ElementSet projections(const StarRing& S) {
  ElementSet out(S.ring().order());
  for (auto e : S.ring().elements())
    if (is_projection(S, e)) out.insert(e);
  return out;
}

/// Every projection is central.
inline CommutationVerdict is_star_abelian(const StarRing& S) {
  return detail::commutes_with_all(S.ring(), projections(S));
}

/// Outcome of a universally quantified check over elements; on failure the
/// smallest offending element.
struct ElementVerdict {
  bool holds = true;
  std::optional<Element> counterexample;
};

inline ElementVerdict idempotents_are_projections(const StarRing& S) {
  for (auto e : idempotents(S.ring()).elements())
    if (S.star(e) != e) return ElementVerdict{false, e};
  return ElementVerdict{};
}

/// Which membership the constructed projection p satisfies relative to e.
struct ProjectionCertificate {
  enum class Kind { Nil, RadicalAndNil };
  Kind kind = Kind::Nil;
  /// Smallest k with (e - p)^k = 0.
  unsigned nilpotency_index = 1;
  bool in_radical = false;
};

struct ProjectionConstruction {
  Element e;
  /// x = 1 + (e - e*)*(e - e*).
  Element x;
  Element x_inverse;
  /// p = x^-1 e e*.
  Element p;
  ProjectionCertificate certificate;
};

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw CertificateFailure(what);
}
}  // namespace detail

/// Builds the projection p = x^-1 e e* with x = 1 + (e - e*)*(e - e*) and
/// certifies p^2 = p = p*, eR = pR, (e - p)^2 = 0, pe = e, ep = p together
/// with xe = ee*e = ex and x* = x. Throws NotIdempotent or
/// PreconditionUnitFails.
inline ProjectionConstruction lemma1_projection(const StarRing& S, Element e,
                                                const TwoSidedIdeal& radical) {
  const auto& R = S.ring();
  if (!is_idempotent(R, e)) throw NotIdempotent(e.index);
  const Element es = S.star(e);
  const Element d = R.sub(e, es);
  const Element x = R.add(R.one(), R.mul(S.star(d), d));
  const UnitGroup U(R);
  if (!U.contains(x)) throw PreconditionUnitFails(x.index);
  const Element x_inv = *U.inverse(x);

  const Element ee_s_e = R.mul(R.mul(e, es), e);
  detail::require(R.mul(x, e) == ee_s_e && R.mul(e, x) == ee_s_e, "xe = ee*e = ex");
  detail::require(S.star(x) == x, "x* = x");

  const Element p = R.mul(x_inv, R.mul(e, es));
  detail::require(R.mul(p, p) == p, "p^2 = p");
  detail::require(S.star(p) == p, "p* = p");
  detail::require(R.mul(p, e) == e, "pe = e");
  detail::require(R.mul(e, p) == p, "ep = p");
  detail::require(right_multiples(R, e) == right_multiples(R, p), "eR = pR");
  const Element diff = R.sub(e, p);
  detail::require(R.mul(diff, diff) == R.zero(), "(e - p)^2 = 0");

  ProjectionCertificate cert;
  cert.nilpotency_index = *nilpotency_index(R, diff);
  cert.in_radical = radical.members.contains(diff);
  cert.kind = cert.in_radical ? ProjectionCertificate::Kind::RadicalAndNil
                              : ProjectionCertificate::Kind::Nil;
  return ProjectionConstruction{e, x, x_inv, p, cert};
}

inline ProjectionConstruction lemma1_projection(const StarRing& S, Element e) {
  return lemma1_projection(S, e, jacobson_radical(S.ring()));
}

/// Dispatches on e - e* in J(R) (radical case) or e - e* nilpotent (nil
/// case), checks that x is a unit as argued, then applies lemma1_projection.
/// The radical case additionally certifies e - p = p(e - e*) in J(R).
/// Throws NotIdempotent or HypothesisFails.
inline ProjectionConstruction lemma2_projection(const StarRing& S, Element e,
                                                const TwoSidedIdeal& radical) {
  const auto& R = S.ring();
  if (!is_idempotent(R, e)) throw NotIdempotent(e.index);
  const Element d = R.sub(e, S.star(e));
  const bool radical_case = radical.members.contains(d);
  if (!radical_case && !is_nilpotent(R, d))
    throw HypothesisFails("e - e* lies in neither J(R) nor Nil(R)");

  const Element x = R.add(R.one(), R.mul(S.star(d), d));
  detail::require(units(R).contains(x), "x is a unit");
  if (!radical_case)
    detail::require(R.mul(S.star(d), d) == R.mul(d, S.star(d)), "(e-e*)*(e-e*) = (e-e*)(e-e*)*");

  auto built = lemma1_projection(S, e, radical);
  if (radical_case) {
    const Element diff = R.sub(e, built.p);
    detail::require(diff == R.mul(built.p, d), "e - p = p(e - e*)");
    detail::require(built.certificate.in_radical, "e - p in J(R)");
    built.certificate.kind = ProjectionCertificate::Kind::RadicalAndNil;
  } else {
    built.certificate.kind = ProjectionCertificate::Kind::Nil;
  }
  return built;
}

inline ProjectionConstruction lemma2_projection(const StarRing& S, Element e) {
  return lemma2_projection(S, e, jacobson_radical(S.ring()));
}

struct QuotientStar {
  StarRing star;
  std::vector<Element> surjection;
  std::vector<Element> representatives;
  TwoSidedIdeal ideal;
};

/// R/I with (a + I)* = a* + I. Throws IdealNotStarClosed when I* != I.
inline QuotientStar induced_quotient_star(const StarRing& S, const TwoSidedIdeal& I,
                                          std::string label = "") {
  const auto& R = S.ring();
  for (auto x : I.members.elements())
    if (!I.members.contains(S.star(x))) throw IdealNotStarClosed(x.index);
  auto q = quotient_ring(R, I, label.empty() ? R.label() + "/I" : std::move(label));

  std::vector<std::uint32_t> map(q.ring.order());
  for (std::size_t c = 0; c < q.representatives.size(); ++c)
    map[c] = q.surjection[S.star(q.representatives[c]).index].index;
  for (auto a : R.elements())
    if (q.surjection[S.star(a).index].index != map[q.surjection[a.index].index])
      throw CertificateFailure("induced involution is not well defined");

  auto star_q = validate_involution(q.ring, map, S.involution().label());
  return QuotientStar{std::move(star_q), std::move(q.surjection), std::move(q.representatives), I};
}

/// R/J(R) with the induced involution.
inline QuotientStar radical_quotient(const StarRing& S) {
  return induced_quotient_star(S, jacobson_radical(S.ring()), S.ring().label() + "/J");
}

struct LiftedProjection {
  /// Idempotent of R found in the coset of ebar.
  Element idempotent;
  ProjectionConstruction construction;
  Element projection() const noexcept { return construction.p; }
};

/// Lifts a projection of R/J(R) to a projection of R: finds an idempotent in
/// the coset by exhaustive search, then applies lemma2_projection.
/// Requires J(R) nil. Throws NotProjectionInQuotient.
inline LiftedProjection lift_projection(const StarRing& S, const QuotientStar& q, Element ebar) {
  const auto& R = S.ring();
  const auto J = jacobson_radical(R);
  if (!(q.ideal.members == J.members))
    throw std::invalid_argument("lift_projection: quotient is not taken at the Jacobson radical");
  for (auto j : J.members.elements())
    if (!is_nilpotent(R, j)) throw HypothesisFails("J(R) is not nil");
  if (ebar.index >= q.star.ring().order() || !is_projection(q.star, ebar))
    throw NotProjectionInQuotient(ebar.index);

  for (auto e : R.elements()) {
    if (q.surjection[e.index] != ebar || !is_idempotent(R, e)) continue;
    auto built = lemma2_projection(S, e, J);
    detail::require(q.surjection[built.p.index] == ebar, "p + J(R) = ebar");
    return LiftedProjection{e, built};
  }
  throw CertificateFailure("no idempotent in the coset of ebar");
}

}  // namespace ringlab
