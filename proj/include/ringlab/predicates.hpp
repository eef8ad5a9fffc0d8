#pragma once

/**
 * @file predicates.hpp
 * @brief Decision procedures for the regularity properties of finite *-rings.
 *
 * Every "there exists an exponent n" search runs n = 1 .. preperiod + period
 * of the element's power sequence; beyond that bound the pair (a^n, a^(n+1))
 * repeats, so absence inside the bound is absence everywhere. Witness
 * searches are lexicographic in (n, element index), which makes every
 * recorded witness the smallest one.
 *
 * Strongly pi-*-regular is decided four independent ways:
 *
 *  1. every a = b + pv = b + vp with b nilpotent, ab = ba, p a projection,
 *     v a unit;
 *  2. pi-regular, plus the four idempotent conditions of the projection
 *     lemmas;
 *  3. *-abelian, and Ra^m = Ra^m(a^m)*a^m for some m;
 *  4. Ra^n = R(a^n)* = Re for some n and idempotent e.
 *
 * The four must agree on every finite *-ring; is_strongly_pi_star_regular()
 * throws EquivalenceBreach when they do not.
 */

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ringlab/core_ring.hpp"
#include "ringlab/star.hpp"

namespace ringlab {

/// a^n = a^n x a^n.
struct PiRegularWitness {
  Element a;
  unsigned n = 1;
  Element x;
};

/// a^n = a^(n+1) x = y a^(n+1).
struct StronglyPiRegularWitness {
  Element a;
  unsigned n = 1;
  Element x;
  Element y;
};

/// a = b + pv = b + vp.
struct DecompositionWitness {
  Element a;
  Element b;
  Element p;
  Element v;
};

/// a^m = s · a^m (a^m)* a^m, which gives Ra^m = Ra^m(a^m)*a^m.
struct GramWitness {
  Element a;
  unsigned m = 1;
  Element s;
};

/// With t = a^n: t = r1·t*, t* = r2·t, e = r3·t, t = r4·e, so
/// Rt = Rt* = Re.
struct IdealTripleWitness {
  Element a;
  unsigned n = 1;
  Element e;
  std::array<Element, 4> factors;
};

/// a = e + u with e a projection, u a unit, eu = ue.
struct CleanWitness {
  Element a;
  Element e;
  Element u;
};

/// A property quantified over every element: one witness per element when
/// it holds, otherwise the smallest failing element.
template <class Witness>
struct ElementwiseVerdict {
  bool holds = true;
  std::vector<Witness> witnesses;
  std::optional<Element> counterexample;
};

namespace detail {
template <class Witness, class Search>
ElementwiseVerdict<Witness> for_every_element(const FiniteRing& R, Search search) {
  ElementwiseVerdict<Witness> out;
  for (auto a : R.elements()) {
    std::optional<Witness> w = search(a);
    if (!w) {
      out.holds = false;
      out.witnesses.clear();
      out.counterexample = a;
      return out;
    }
    out.witnesses.push_back(*w);
  }
  return out;
}
}  // namespace detail

inline ElementwiseVerdict<PiRegularWitness> is_pi_regular(const FiniteRing& R) {
  return detail::for_every_element<PiRegularWitness>(R, [&](Element a) -> std::optional<PiRegularWitness> {
    const unsigned bound = power_profile(R, a).exponent_bound();
    for (unsigned n = 1; n <= bound; ++n) {
      const Element t = pow(R, a, n);
      for (auto x : R.elements())
        if (R.mul(R.mul(t, x), t) == t) return PiRegularWitness{a, n, x};
    }
    return std::nullopt;
  });
}

inline ElementwiseVerdict<StronglyPiRegularWitness> is_strongly_pi_regular(const FiniteRing& R) {
  return detail::for_every_element<StronglyPiRegularWitness>(
      R, [&](Element a) -> std::optional<StronglyPiRegularWitness> {
        const unsigned bound = power_profile(R, a).exponent_bound();
        for (unsigned n = 1; n <= bound; ++n) {
          const Element t = pow(R, a, n);
          const Element t1 = R.mul(t, a);
          std::optional<Element> x, y;
          for (auto r : R.elements()) {
            if (!x && R.mul(t1, r) == t) x = r;
            if (!y && R.mul(r, t1) == t) y = r;
            if (x && y) return StronglyPiRegularWitness{a, n, *x, *y};
          }
        }
        return std::nullopt;
      });
}

/// The three conditions of either projection lemma, evaluated separately.
using ConditionTriple = std::array<bool, 3>;

namespace detail {
enum class Membership { Radical, Nil };

inline bool differences_in(const StarRing& S, const ElementSet& idem, const ElementSet& target) {
  for (auto e : idem.elements())
    if (!target.contains(S.ring().sub(e, S.star(e)))) return false;
  return true;
}

inline bool idempotents_normal(const StarRing& S, const ElementSet& idem) {
  const auto& R = S.ring();
  for (auto e : idem.elements())
    if (R.mul(e, S.star(e)) != R.mul(S.star(e), e)) return false;
  return true;
}

/// Idempotents equal projections, compared as sets.
inline bool idempotent_set_is_projection_set(const StarRing& S) {
  return idempotents(S.ring()) == projections(S);
}
}  // namespace detail

/// (1) e - e* in J(R) for all idempotents and *-abelian; (2) the same with
/// Nil(R); (3) every idempotent is a projection.
inline ConditionTriple lemma3_conditions(const StarRing& S) {
  const auto& R = S.ring();
  const auto idem = idempotents(R);
  const bool star_abelian = is_star_abelian(S).holds;
  return {detail::differences_in(S, idem, jacobson_radical(R).members) && star_abelian,
          detail::differences_in(S, idem, nilpotents(R)) && star_abelian,
          detail::idempotent_set_is_projection_set(S)};
}

/// As lemma3_conditions with ee* = e*e in place of *-abelian.
inline ConditionTriple lemma4_conditions(const StarRing& S) {
  const auto& R = S.ring();
  const auto idem = idempotents(R);
  const bool normal = detail::idempotents_normal(S, idem);
  return {detail::differences_in(S, idem, jacobson_radical(R).members) && normal,
          detail::differences_in(S, idem, nilpotents(R)) && normal,
          detail::idempotent_set_is_projection_set(S)};
}

inline ElementwiseVerdict<DecompositionWitness> thm5_condition1(const StarRing& S) {
  const auto& R = S.ring();
  const auto nil = nilpotents(R);
  const auto proj = projections(S).elements();
  const auto unit_list = units(R).members().elements();
  return detail::for_every_element<DecompositionWitness>(
      R, [&](Element a) -> std::optional<DecompositionWitness> {
        for (auto p : proj)
          for (auto v : unit_list) {
            const Element pv = R.mul(p, v);
            if (pv != R.mul(v, p)) continue;
            const Element b = R.sub(a, pv);
            if (nil.contains(b) && R.mul(a, b) == R.mul(b, a)) return DecompositionWitness{a, b, p, v};
          }
        return std::nullopt;
      });
}

struct Condition2Verdict {
  bool holds = false;
  bool pi_regular = false;
  /// (a), (b): lemma 3 conditions 1-2; (c), (d): lemma 4 conditions 1-2.
  std::array<bool, 4> subconditions{};
};

/// pi-regular and the four idempotent sub-conditions. Throws
/// EquivalenceBreach if the sub-conditions disagree.
inline Condition2Verdict thm5_condition2(const StarRing& S) {
  Condition2Verdict out;
  out.pi_regular = is_pi_regular(S.ring()).holds;
  const auto l3 = lemma3_conditions(S);
  const auto l4 = lemma4_conditions(S);
  out.subconditions = {l3[0], l3[1], l4[0], l4[1]};
  for (bool c : out.subconditions)
    if (c != out.subconditions[0])
      throw EquivalenceBreach("condition 2 sub-conditions disagree on " + S.label());
  out.holds = out.pi_regular && out.subconditions[0];
  return out;
}

struct Condition3Verdict {
  bool holds = true;
  bool star_abelian = true;
  std::vector<GramWitness> witnesses;
  /// Smallest element with no admissible exponent; absent when the failure
  /// comes from *-abelian alone.
  std::optional<Element> counterexample;
};

inline Condition3Verdict thm5_condition3(const StarRing& S) {
  const auto& R = S.ring();
  Condition3Verdict out;
  out.star_abelian = is_star_abelian(S).holds;
  for (auto a : R.elements()) {
    const unsigned bound = power_profile(R, a).exponent_bound();
    std::optional<GramWitness> found;
    for (unsigned m = 1; m <= bound && !found; ++m) {
      const Element t = pow(R, a, m);
      const Element gram = R.mul(R.mul(t, S.star(t)), t);
      if (left_multiples(R, t) != left_multiples(R, gram)) continue;
      for (auto s : R.elements())
        if (R.mul(s, gram) == t) {
          found = GramWitness{a, m, s};
          break;
        }
      detail::require(found.has_value(), "equal left ideals without generator witness");
    }
    if (!found) {
      out.holds = false;
      out.counterexample = a;
      out.witnesses.clear();
      return out;
    }
    out.witnesses.push_back(*found);
  }
  out.holds = out.star_abelian;
  if (!out.holds) out.witnesses.clear();
  return out;
}

inline ElementwiseVerdict<IdealTripleWitness> thm5_condition4(const StarRing& S) {
  const auto& R = S.ring();
  const auto idem = idempotents(R).elements();
  auto factor = [&](Element target, Element generator) {
    for (auto r : R.elements())
      if (R.mul(r, generator) == target) return r;
    throw CertificateFailure("equal left ideals without generator witness");
  };
  return detail::for_every_element<IdealTripleWitness>(
      R, [&](Element a) -> std::optional<IdealTripleWitness> {
        const unsigned bound = power_profile(R, a).exponent_bound();
        for (unsigned n = 1; n <= bound; ++n) {
          const Element t = pow(R, a, n);
          const Element ts = S.star(t);
          const auto left_t = left_multiples(R, t);
          if (left_t != left_multiples(R, ts)) continue;
          for (auto e : idem) {
            if (left_multiples(R, e) != left_t) continue;
            return IdealTripleWitness{
                a, n, e, {factor(t, ts), factor(ts, t), factor(e, t), factor(t, e)}};
          }
        }
        return std::nullopt;
      });
}

inline ElementwiseVerdict<CleanWitness> is_strongly_star_clean(const StarRing& S) {
  const auto& R = S.ring();
  const auto proj = projections(S).elements();
  const UnitGroup U(R);
  return detail::for_every_element<CleanWitness>(R, [&](Element a) -> std::optional<CleanWitness> {
    for (auto e : proj) {
      const Element u = R.sub(a, e);
      if (U.contains(u) && R.mul(e, u) == R.mul(u, e)) return CleanWitness{a, e, u};
    }
    return std::nullopt;
  });
}

/// All four characterizations, evaluated independently.
struct StarRegularity {
  ElementwiseVerdict<DecompositionWitness> condition1;
  Condition2Verdict condition2;
  Condition3Verdict condition3;
  ElementwiseVerdict<IdealTripleWitness> condition4;

  std::array<bool, 4> values() const {
    return {condition1.holds, condition2.holds, condition3.holds, condition4.holds};
  }
  bool agree() const {
    const auto v = values();
    return v[0] == v[1] && v[1] == v[2] && v[2] == v[3];
  }
};

inline StarRegularity star_regularity_conditions(const StarRing& S) {
  return StarRegularity{thm5_condition1(S), thm5_condition2(S), thm5_condition3(S),
                        thm5_condition4(S)};
}

inline std::string describe(const StarRing& S, const StarRegularity& c) {
  std::ostringstream out;
  const auto v = c.values();
  out << S.label() << ": condition1=" << v[0] << " condition2=" << v[1] << " (pi_regular="
      << c.condition2.pi_regular << " sub=" << c.condition2.subconditions[0]
      << c.condition2.subconditions[1] << c.condition2.subconditions[2]
      << c.condition2.subconditions[3] << ") condition3=" << v[2]
      << " (star_abelian=" << c.condition3.star_abelian << ") condition4=" << v[3];
  if (c.condition1.counterexample) out << " c1_fails_at=" << c.condition1.counterexample->index;
  if (c.condition3.counterexample) out << " c3_fails_at=" << c.condition3.counterexample->index;
  if (c.condition4.counterexample) out << " c4_fails_at=" << c.condition4.counterexample->index;
  return out.str();
}

/// The common value of conditions 1-4. Throws EquivalenceBreach otherwise.
inline bool is_strongly_pi_star_regular(const StarRing& S) {
  const auto c = star_regularity_conditions(S);
  if (!c.agree()) throw EquivalenceBreach("strongly pi-*-regular conditions disagree: " + describe(S, c));
  return c.condition1.holds;
}

/// J(R) consists of nilpotents; on failure the smallest non-nilpotent member.
inline ElementVerdict radical_is_nil(const FiniteRing& R) {
  for (auto j : jacobson_radical(R).members.elements())
    if (!is_nilpotent(R, j)) return ElementVerdict{false, j};
  return ElementVerdict{};
}

struct Proposition8Check {
  bool lhs = false;
  bool rhs = false;
  bool star_abelian = false;
  bool radical_nil = false;
  bool quotient_regular = false;
};

/// lhs: strongly pi-*-regular. rhs: *-abelian, J(R) nil, and R/J(R) with the
/// induced involution strongly pi-*-regular. Throws EquivalenceBreach when
/// they differ.
inline Proposition8Check proposition8_check(const StarRing& S) {
  Proposition8Check out;
  out.lhs = is_strongly_pi_star_regular(S);
  out.star_abelian = is_star_abelian(S).holds;
  out.radical_nil = radical_is_nil(S.ring()).holds;
  out.quotient_regular = is_strongly_pi_star_regular(radical_quotient(S).star);
  out.rhs = out.star_abelian && out.radical_nil && out.quotient_regular;
  if (out.lhs != out.rhs)
    throw EquivalenceBreach("proposition 8 sides disagree on " + S.label());
  return out;
}

}  // namespace ringlab
