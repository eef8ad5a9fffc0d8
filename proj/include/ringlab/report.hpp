#pragma once

/**
 * @file report.hpp
 * @brief Per-ring property reports, their JSON form, and witness replay.
 *
 * A report is serialized with stable key order (nlohmann::json sorts object
 * keys). Witnesses are arrays of element indices and exponents:
 *
 *   pi_regular            [a, n, x]                 a^n = a^n x a^n
 *   strongly_pi_regular   [a, n, x, y]              a^n = a^(n+1) x = y a^(n+1)
 *   condition1            [a, b, p, v]              a = b + pv = b + vp
 *   condition3            [a, m, s]                 a^m = s a^m (a^m)* a^m
 *   condition4            [a, n, e, r1, r2, r3, r4] see IdealTripleWitness
 *   strongly_star_clean   [a, e, u]                 a = e + u, eu = ue
 *
 * verify_report() replays a serialized report against the tables without
 * going through the decision procedures: witnesses are checked as identities,
 * counterexamples by a direct search over that single element.
 */

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/predicates.hpp"
#include "ringlab/star.hpp"

namespace ringlab {

using Json = nlohmann::json;

struct PropertyReport {
  std::string label;
  std::string ring_label;
  std::string involution_label;
  std::size_t order = 0;

  CommutationVerdict commutative;
  CommutationVerdict abelian;
  CommutationVerdict star_abelian;
  ElementVerdict idempotents_are_projections;
  ElementwiseVerdict<PiRegularWitness> pi_regular;
  ElementwiseVerdict<StronglyPiRegularWitness> strongly_pi_regular;
  StarRegularity conditions;
  bool strongly_pi_star_regular = false;
  ElementwiseVerdict<CleanWitness> strongly_star_clean;
  ElementVerdict j_nil;
  Proposition8Check proposition8;
};

/// Evaluates every property. Throws EquivalenceBreach when the four
/// characterizations of strongly pi-*-regular, or the two sides of the
/// radical criterion, disagree.
inline PropertyReport make_report(const StarRing& S) {
  const auto& R = S.ring();
  PropertyReport r;
  r.label = S.label();
  r.ring_label = R.label();
  r.involution_label = S.involution().label();
  r.order = R.order();
  r.commutative = is_commutative(R);
  r.abelian = is_abelian_ring(R);
  r.star_abelian = is_star_abelian(S);
  r.idempotents_are_projections = idempotents_are_projections(S);
  r.pi_regular = is_pi_regular(R);
  r.strongly_pi_regular = is_strongly_pi_regular(R);
  r.conditions = star_regularity_conditions(S);
  if (!r.conditions.agree())
    throw EquivalenceBreach("strongly pi-*-regular conditions disagree: " + describe(S, r.conditions));
  r.strongly_pi_star_regular = r.conditions.condition1.holds;
  r.strongly_star_clean = is_strongly_star_clean(S);
  r.j_nil = radical_is_nil(R);
  r.proposition8 = proposition8_check(S);
  return r;
}

/// Property names accepted by profiles and --properties.
inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "commutative",        "abelian",      "star_abelian",          "idempotents_are_projections",
      "pi_regular",         "strongly_pi_regular", "condition1",     "condition2",
      "condition3",         "condition4",   "strongly_pi_star_regular", "strongly_star_clean",
      "j_nil",              "proposition8"};
  return names;
}

/// Boolean value of a named property; throws std::out_of_range on unknown
/// names. "proposition8" is its left-hand side.
inline bool property_value(const PropertyReport& r, const std::string& name) {
  if (name == "commutative") return r.commutative.holds;
  if (name == "abelian") return r.abelian.holds;
  if (name == "star_abelian") return r.star_abelian.holds;
  if (name == "idempotents_are_projections") return r.idempotents_are_projections.holds;
  if (name == "pi_regular") return r.pi_regular.holds;
  if (name == "strongly_pi_regular") return r.strongly_pi_regular.holds;
  if (name == "condition1") return r.conditions.condition1.holds;
  if (name == "condition2") return r.conditions.condition2.holds;
  if (name == "condition3") return r.conditions.condition3.holds;
  if (name == "condition4") return r.conditions.condition4.holds;
  if (name == "strongly_pi_star_regular") return r.strongly_pi_star_regular;
  if (name == "strongly_star_clean") return r.strongly_star_clean.holds;
  if (name == "j_nil") return r.j_nil.holds;
  if (name == "proposition8") return r.proposition8.lhs;
  throw std::out_of_range("unknown property: " + name);
}

namespace detail {

inline Json commutation_json(const CommutationVerdict& v) {
  Json j{{"holds", v.holds}};
  if (v.counterexample) j["counterexample"] = {v.counterexample->first.index, v.counterexample->second.index};
  return j;
}

inline Json element_json(const ElementVerdict& v) {
  Json j{{"holds", v.holds}};
  if (v.counterexample) j["counterexample"] = v.counterexample->index;
  return j;
}

inline Json witness_row(const PiRegularWitness& w) { return {w.a.index, w.n, w.x.index}; }
inline Json witness_row(const StronglyPiRegularWitness& w) { return {w.a.index, w.n, w.x.index, w.y.index}; }
inline Json witness_row(const DecompositionWitness& w) { return {w.a.index, w.b.index, w.p.index, w.v.index}; }
inline Json witness_row(const GramWitness& w) { return {w.a.index, w.m, w.s.index}; }
inline Json witness_row(const IdealTripleWitness& w) {
  return {w.a.index, w.n, w.e.index, w.factors[0].index, w.factors[1].index, w.factors[2].index,
          w.factors[3].index};
}
inline Json witness_row(const CleanWitness& w) { return {w.a.index, w.e.index, w.u.index}; }

template <class W>
Json elementwise_json(const ElementwiseVerdict<W>& v) {
  Json j{{"holds", v.holds}};
  if (v.holds) {
    Json rows = Json::array();
    for (const auto& w : v.witnesses) rows.push_back(witness_row(w));
    j["witnesses"] = std::move(rows);
  }
  if (v.counterexample) j["counterexample"] = v.counterexample->index;
  return j;
}

}  // namespace detail

inline Json to_json(const PropertyReport& r) {
  using namespace detail;
  const auto& c = r.conditions;
  Json c3{{"holds", c.condition3.holds}, {"star_abelian", c.condition3.star_abelian}};
  if (c.condition3.holds) {
    Json rows = Json::array();
    for (const auto& w : c.condition3.witnesses) rows.push_back(witness_row(w));
    c3["witnesses"] = std::move(rows);
  }
  if (c.condition3.counterexample) c3["counterexample"] = c.condition3.counterexample->index;

  Json props{
      {"commutative", commutation_json(r.commutative)},
      {"abelian", commutation_json(r.abelian)},
      {"star_abelian", commutation_json(r.star_abelian)},
      {"idempotents_are_projections", element_json(r.idempotents_are_projections)},
      {"pi_regular", elementwise_json(r.pi_regular)},
      {"strongly_pi_regular", elementwise_json(r.strongly_pi_regular)},
      {"condition1", elementwise_json(c.condition1)},
      {"condition2",
       {{"holds", c.condition2.holds},
        {"pi_regular", c.condition2.pi_regular},
        {"subconditions", c.condition2.subconditions}}},
      {"condition3", std::move(c3)},
      {"condition4", elementwise_json(c.condition4)},
      {"strongly_pi_star_regular", {{"holds", r.strongly_pi_star_regular}}},
      {"strongly_star_clean", elementwise_json(r.strongly_star_clean)},
      {"j_nil", element_json(r.j_nil)},
      {"proposition8",
       {{"lhs", r.proposition8.lhs},
        {"rhs", r.proposition8.rhs},
        {"star_abelian", r.proposition8.star_abelian},
        {"radical_nil", r.proposition8.radical_nil},
        {"quotient_strongly_pi_star_regular", r.proposition8.quotient_regular}}},
  };
  return Json{{"label", r.label},
              {"ring", r.ring_label},
              {"involution", r.involution_label},
              {"order", r.order},
              {"properties", std::move(props)}};
}

namespace detail {

/// Replays serialized witnesses using only the tables and the involution.
class Replayer {
 public:
  explicit Replayer(const StarRing& S) : S_(S), R_(S.ring()) {}

  std::vector<std::string> run(const Json& report) {
    failures_.clear();
    if (!report.contains("properties")) {
      fail("report", "missing properties");
      return failures_;
    }
    const Json& p = report.at("properties");
    try {
      check_commutation("commutative", p.at("commutative"), [](Element) { return true; });
      check_commutation("abelian", p.at("abelian"), [&](Element e) { return idem(e); });
      check_commutation("star_abelian", p.at("star_abelian"), [&](Element e) { return proj(e); });
      check_projections(p.at("idempotents_are_projections"));
      check_elementwise("pi_regular", p.at("pi_regular"), 3,
                        [&](const Json& w) { return pi_regular_row(w); },
                        [&](Element a) { return exists_pi_regular(a); });
      check_elementwise("strongly_pi_regular", p.at("strongly_pi_regular"), 4,
                        [&](const Json& w) { return strongly_row(w); },
                        [&](Element a) { return exists_strongly(a); });
      check_elementwise("condition1", p.at("condition1"), 4,
                        [&](const Json& w) { return decomposition_row(w); },
                        [&](Element a) { return exists_decomposition(a); });
      check_elementwise("condition3", p.at("condition3"), 3,
                        [&](const Json& w) { return gram_row(w); },
                        [&](Element a) { return exists_gram(a); });
      check_elementwise("condition4", p.at("condition4"), 7,
                        [&](const Json& w) { return triple_row(w); },
                        [&](Element a) { return exists_triple(a); });
      check_elementwise("strongly_star_clean", p.at("strongly_star_clean"), 3,
                        [&](const Json& w) { return clean_row(w); },
                        [&](Element a) { return exists_clean(a); });
      check_j_nil(p.at("j_nil"));
      check_agreement(p);
    } catch (const Json::exception& ex) {
      fail("report", std::string("malformed: ") + ex.what());
    }
    return failures_;
  }

 private:
  const StarRing& S_;
  const FiniteRing& R_;
  std::vector<std::string> failures_;

  void fail(const std::string& property, const std::string& why) { failures_.push_back(property + ": " + why); }

  Element el(const Json& v) const {
    const auto i = v.get<std::uint32_t>();
    if (i >= R_.order()) throw std::out_of_range("element index out of range");
    return Element{i};
  }
  Element power(Element a, unsigned n) const {
    Element x = a;
    for (unsigned i = 1; i < n; ++i) x = R_.mul(x, a);
    return x;
  }
  // Exponent bound independent of power_profile: order + 1 always suffices.
  unsigned max_exponent() const { return static_cast<unsigned>(R_.order()) + 1; }
  bool idem(Element e) const { return R_.mul(e, e) == e; }
  bool proj(Element e) const { return idem(e) && S_.star(e) == e; }
  bool unit(Element u) const {
    for (auto v : R_.elements())
      if (R_.mul(u, v) == R_.one() && R_.mul(v, u) == R_.one()) return true;
    return false;
  }
  bool nil(Element b) const { return power(b, max_exponent()) == R_.zero(); }
  bool in_radical(Element x) const {
    for (auto r : R_.elements())
      if (!unit(R_.sub(R_.one(), R_.mul(r, x)))) return false;
    return true;
  }
  bool left_generates(Element target, Element generator) const {
    for (auto r : R_.elements())
      if (R_.mul(r, generator) == target) return true;
    return false;
  }
  bool star_abelian_direct() const {
    for (auto e : R_.elements())
      if (proj(e))
        for (auto r : R_.elements())
          if (R_.mul(e, r) != R_.mul(r, e)) return false;
    return true;
  }

  template <class Subject>
  void check_commutation(const std::string& name, const Json& v, Subject subject) {
    const bool holds = v.at("holds").get<bool>();
    if (holds) {
      for (auto x : R_.elements())
        if (subject(x))
          for (auto r : R_.elements())
            if (R_.mul(x, r) != R_.mul(r, x)) return fail(name, "claimed true but fails");
      return;
    }
    const auto& ce = v.at("counterexample");
    const Element x = el(ce.at(0)), r = el(ce.at(1));
    if (!subject(x) || R_.mul(x, r) == R_.mul(r, x)) fail(name, "counterexample does not replay");
  }

  void check_projections(const Json& v) {
    if (v.at("holds").get<bool>()) {
      for (auto e : R_.elements())
        if (idem(e) && S_.star(e) != e) return fail("idempotents_are_projections", "claimed true but fails");
      return;
    }
    const Element e = el(v.at("counterexample"));
    if (!idem(e) || S_.star(e) == e) fail("idempotents_are_projections", "counterexample does not replay");
  }

  template <class Row, class Exists>
  void check_elementwise(const std::string& name, const Json& v, std::size_t width, Row row, Exists exists) {
    if (v.at("holds").get<bool>()) {
      const auto& rows = v.at("witnesses");
      if (rows.size() != R_.order()) return fail(name, "witness count differs from ring order");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width || rows[i].at(0).get<std::uint32_t>() != i)
          return fail(name, "witness row " + std::to_string(i) + " malformed");
        if (!row(rows[i])) return fail(name, "witness for element " + std::to_string(i) + " does not replay");
      }
      return;
    }
    if (!v.contains("counterexample")) {
      // Only condition3 may fail without an element: *-abelian fails.
      if (name == "condition3" && !v.at("star_abelian").get<bool>() && !star_abelian_direct()) return;
      return fail(name, "false without counterexample");
    }
    if (exists(el(v.at("counterexample")))) fail(name, "counterexample admits a witness");
  }

  bool pi_regular_row(const Json& w) const {
    const Element a = el(w[0]), x = el(w[2]);
    const auto n = w[1].get<unsigned>();
    const Element t = power(a, n);
    return n >= 1 && R_.mul(R_.mul(t, x), t) == t;
  }
  bool exists_pi_regular(Element a) const {
    for (unsigned n = 1; n <= max_exponent(); ++n) {
      const Element t = power(a, n);
      for (auto x : R_.elements())
        if (R_.mul(R_.mul(t, x), t) == t) return true;
    }
    return false;
  }

  bool strongly_row(const Json& w) const {
    const Element a = el(w[0]), x = el(w[2]), y = el(w[3]);
    const auto n = w[1].get<unsigned>();
    const Element t = power(a, n), t1 = power(a, n + 1);
    return n >= 1 && R_.mul(t1, x) == t && R_.mul(y, t1) == t;
  }
  bool exists_strongly(Element a) const {
    for (unsigned n = 1; n <= max_exponent(); ++n) {
      const Element t = power(a, n), t1 = power(a, n + 1);
      bool right = false, left = false;
      for (auto r : R_.elements()) {
        right = right || R_.mul(t1, r) == t;
        left = left || R_.mul(r, t1) == t;
      }
      if (right && left) return true;
    }
    return false;
  }

  bool decomposition_row(const Json& w) const {
    const Element a = el(w[0]), b = el(w[1]), p = el(w[2]), v = el(w[3]);
    const Element pv = R_.mul(p, v);
    return pv == R_.mul(v, p) && R_.add(b, pv) == a && nil(b) && R_.mul(a, b) == R_.mul(b, a) &&
           proj(p) && unit(v);
  }
  bool exists_decomposition(Element a) const {
    for (auto p : R_.elements()) {
      if (!proj(p)) continue;
      for (auto v : R_.elements()) {
        const Element pv = R_.mul(p, v);
        if (pv != R_.mul(v, p) || !unit(v)) continue;
        const Element b = R_.sub(a, pv);
        if (nil(b) && R_.mul(a, b) == R_.mul(b, a)) return true;
      }
    }
    return false;
  }

  bool gram_row(const Json& w) const {
    const Element a = el(w[0]), s = el(w[2]);
    const auto m = w[1].get<unsigned>();
    const Element t = power(a, m);
    return m >= 1 && R_.mul(s, R_.mul(R_.mul(t, S_.star(t)), t)) == t;
  }
  bool exists_gram(Element a) const {
    for (unsigned m = 1; m <= max_exponent(); ++m) {
      const Element t = power(a, m);
      if (left_generates(t, R_.mul(R_.mul(t, S_.star(t)), t))) return true;
    }
    return false;
  }

  bool triple_row(const Json& w) const {
    const Element a = el(w[0]), e = el(w[2]);
    const auto n = w[1].get<unsigned>();
    const Element t = power(a, n), ts = S_.star(t);
    return n >= 1 && idem(e) && R_.mul(el(w[3]), ts) == t && R_.mul(el(w[4]), t) == ts &&
           R_.mul(el(w[5]), t) == e && R_.mul(el(w[6]), e) == t;
  }
  bool exists_triple(Element a) const {
    for (unsigned n = 1; n <= max_exponent(); ++n) {
      const Element t = power(a, n), ts = S_.star(t);
      if (!left_generates(t, ts) || !left_generates(ts, t)) continue;
      for (auto e : R_.elements())
        if (idem(e) && left_generates(e, t) && left_generates(t, e)) return true;
    }
    return false;
  }

  bool clean_row(const Json& w) const {
    const Element a = el(w[0]), e = el(w[1]), u = el(w[2]);
    return proj(e) && unit(u) && R_.add(e, u) == a && R_.mul(e, u) == R_.mul(u, e);
  }
  bool exists_clean(Element a) const {
    for (auto e : R_.elements()) {
      if (!proj(e)) continue;
      const Element u = R_.sub(a, e);
      if (unit(u) && R_.mul(e, u) == R_.mul(u, e)) return true;
    }
    return false;
  }

  void check_j_nil(const Json& v) {
    if (v.at("holds").get<bool>()) {
      for (auto x : R_.elements())
        if (in_radical(x) && !nil(x)) return fail("j_nil", "claimed true but fails");
      return;
    }
    const Element x = el(v.at("counterexample"));
    if (!in_radical(x) || nil(x)) fail("j_nil", "counterexample does not replay");
  }

  void check_agreement(const Json& p) {
    const bool c1 = p.at("condition1").at("holds").get<bool>();
    for (const char* name : {"condition2", "condition3", "condition4", "strongly_pi_star_regular"})
      if (p.at(name).at("holds").get<bool>() != c1) fail(name, "disagrees with condition1");
    const auto& c2 = p.at("condition2");
    if (c2.at("holds").get<bool>() && !p.at("pi_regular").at("holds").get<bool>())
      fail("condition2", "holds without pi-regularity");
    if (c2.at("pi_regular").get<bool>() != p.at("pi_regular").at("holds").get<bool>())
      fail("condition2", "pi_regular flag disagrees");
    const auto& p8 = p.at("proposition8");
    if (p8.at("lhs").get<bool>() != p8.at("rhs").get<bool>()) fail("proposition8", "sides differ");
    if (p8.at("lhs").get<bool>() != c1) fail("proposition8", "lhs disagrees with condition1");
    if (p8.at("star_abelian").get<bool>() != p.at("star_abelian").at("holds").get<bool>())
      fail("proposition8", "star_abelian flag disagrees");
    if (p8.at("radical_nil").get<bool>() != p.at("j_nil").at("holds").get<bool>())
      fail("proposition8", "radical_nil flag disagrees");
  }
};

}  // namespace detail

/// Replays every witness and counterexample in a serialized report; returns
/// a description of each failure (empty when everything replays).
inline std::vector<std::string> verify_report(const StarRing& S, const Json& report) {
  return detail::Replayer(S).run(report);
}

inline std::vector<std::string> verify_report(const StarRing& S, const PropertyReport& report) {
  return verify_report(S, to_json(report));
}

}  // namespace ringlab
