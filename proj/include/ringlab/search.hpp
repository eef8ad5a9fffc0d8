#pragma once

/**
 * @file search.hpp
 * @brief Involution enumeration, profile searches, and the atlas file.
 *
 * An atlas is line-delimited JSON, one AtlasRecord per line:
 *
 *   {"involution":..., "order":N, "report":{...}, "ring":..., "spec":{...},
 *    "timestamp":...}
 *
 * Each record carries the spec it was built from, so loading can rebuild the
 * ring, recompute the report and compare.
 */

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/report.hpp"
#include "ringlab/spec_io.hpp"

namespace ringlab {

namespace detail {

/// Greedy additive generating set, starting from 1.
inline std::vector<Element> additive_generators(const FiniteRing& R) {
  std::vector<Element> gens;
  ElementSet span(R.order());
  span.insert(R.zero());
  auto absorb = [&](Element g) {
    std::vector<Element> frontier = span.elements();
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const Element next = R.add(frontier[head], g);
      if (span.insert(next)) frontier.push_back(next);
    }
  };
  std::vector<Element> order{R.one()};
  for (auto x : R.elements())
    if (x != R.one()) order.push_back(x);
  for (auto x : order)
    if (!span.contains(x)) {
      gens.push_back(x);
      absorb(x);
    }
  return gens;
}

/// Breadth-first expression of each element as (earlier element) + generator.
struct SpanTree {
  std::vector<Element> order;  // discovery order, starting at zero
  std::vector<std::uint32_t> parent;
  std::vector<std::size_t> generator;  // generator index used to reach the element
  std::vector<std::size_t> depth;      // number of generators needed to reach it
};

inline SpanTree span_tree(const FiniteRing& R, const std::vector<Element>& gens) {
  SpanTree t;
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  t.parent.assign(R.order(), 0);
  t.generator.assign(R.order(), none);
  t.depth.assign(R.order(), none);
  std::vector<bool> seen(R.order(), false);
  // Grow generator by generator so that the span of the first i generators
  // is a prefix of the discovery order.
  t.order.push_back(R.zero());
  seen[R.zero().index] = true;
  t.depth[R.zero().index] = 0;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t head = 0; head < t.order.size(); ++head) {
      const Element next = R.add(t.order[head], gens[g]);
      if (seen[next.index]) continue;
      seen[next.index] = true;
      t.parent[next.index] = t.order[head].index;
      t.generator[next.index] = g;
      t.depth[next.index] = g + 1;
      t.order.push_back(next);
    }
  }
  return t;
}

}  // namespace detail

/// Every involution of R, found by backtracking over images of an additive
/// generating set with the axioms checked on each partial span.
inline std::vector<StarRing> enumerate_involutions(const FiniteRing& R, const Caps& caps = Caps{}) {
  enforce_cap(R.order(), caps.involution);
  const auto gens = detail::additive_generators(R);
  const auto tree = detail::span_tree(R, gens);
  const std::size_t n = R.order();
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> image(gens.size(), unset);
  std::vector<StarRing> found;

  // Map on the span of the first `level` generators, or nullopt when the
  // partial map already violates an axiom.
  auto partial_map = [&](std::size_t level) -> std::optional<std::vector<std::uint32_t>> {
    std::vector<std::uint32_t> map(n, unset);
    std::vector<bool> domain(n, false), used(n, false);
    std::vector<Element> members;
    for (auto x : tree.order) {
      if (tree.depth[x.index] > level) continue;
      if (x == R.zero()) {
        map[x.index] = R.zero().index;
      } else {
        const std::size_t g = tree.generator[x.index];
        map[x.index] = R.add(Element{map[tree.parent[x.index]]}, Element{image[g]}).index;
      }
      if (used[map[x.index]]) return std::nullopt;
      used[map[x.index]] = true;
      domain[x.index] = true;
      members.push_back(x);
    }
    auto S = [&](Element a) { return Element{map[a.index]}; };
    for (auto x : members) {
      if (domain[S(x).index] && S(S(x)) != x) return std::nullopt;
      for (auto y : members) {
        const Element sum = R.add(x, y);
        if (domain[sum.index] && S(sum) != R.add(S(x), S(y))) return std::nullopt;
        const Element prod = R.mul(x, y);
        if (domain[prod.index] && S(prod) != R.mul(S(y), S(x))) return std::nullopt;
      }
    }
    return map;
  };

  auto recurse = [&](auto&& self, std::size_t level) -> void {
    if (level == gens.size()) {
      auto map = partial_map(level);
      if (!map) return;
      try {
        bool is_identity = true;
        for (std::uint32_t i = 0; i < n; ++i) is_identity = is_identity && (*map)[i] == i;
        const std::string label = is_identity ? "identity" : "involution" + std::to_string(found.size());
        found.push_back(validate_involution(R, *map, label));
      } catch (const AxiomViolation&) {
      }
      return;
    }
    for (std::uint32_t c = 0; c < n; ++c) {
      if (level == 0 && Element{c} != R.one()) continue;  // 1* = 1
      image[level] = c;
      if (partial_map(level + 1)) self(self, level + 1);
    }
    image[level] = unset;
  };
  recurse(recurse, 0);
  return found;
}

/// Conjunction of property literals such as "star_abelian,!strongly_pi_star_regular".
class Profile {
 public:
  struct Literal {
    std::string name;
    bool positive = true;
  };

  Profile() = default;

  static Profile parse(const std::string& text) {
    Profile p;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
      const auto first = item.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
      Literal lit;
      if (item.front() == '!') {
        lit.positive = false;
        item.erase(0, 1);
      }
      if (item == "noncommutative") {
        item = "commutative";
        lit.positive = !lit.positive;
      }
      const auto& names = property_names();
      if (std::find(names.begin(), names.end(), item) == names.end())
        throw SpecParseError("unknown property in profile: " + item);
      lit.name = item;
      p.literals_.push_back(lit);
    }
    return p;
  }

  bool matches(const PropertyReport& r) const {
    for (const auto& lit : literals_)
      if (property_value(r, lit.name) != lit.positive) return false;
    return true;
  }

  const std::vector<Literal>& literals() const noexcept { return literals_; }

  std::string to_string() const {
    std::string out;
    for (const auto& lit : literals_) {
      if (!out.empty()) out += ',';
      out += (lit.positive ? "" : "!") + lit.name;
    }
    return out;
  }

 private:
  std::vector<Literal> literals_;
};

struct SearchTask {
  enum class Source { Corpus, Sweep, Specs };

  Source source = Source::Corpus;
  /// Specs searched for Source::Specs; for Source::Corpus an empty list means
  /// the default corpus.
  std::vector<StarSpec> specs;
  Profile profile;
  Caps caps;
  /// Replace each ring's listed involutions by all of its involutions when
  /// the order is within the involution cap.
  bool all_involutions = false;
  /// Largest order generated by Source::Sweep.
  std::size_t sweep_max_order = 32;
  std::string timestamp;
};

struct AtlasRecord {
  std::string ring_label;
  std::string involution_label;
  std::size_t order = 0;
  StarSpec spec;
  Json report;
  std::string timestamp;
};

inline Json to_json(const AtlasRecord& r) {
  return Json{{"ring", r.ring_label},     {"involution", r.involution_label}, {"order", r.order},
              {"spec", to_json(r.spec)},  {"report", r.report},               {"timestamp", r.timestamp}};
}

inline AtlasRecord atlas_record_from_json(const Json& j) {
  AtlasRecord r;
  r.ring_label = detail::get_as<std::string>(j, "ring");
  r.involution_label = detail::get_as<std::string>(j, "involution");
  r.order = detail::get_as<std::size_t>(j, "order");
  r.spec = star_spec_from_json(detail::field(j, "spec"));
  r.report = detail::field(j, "report");
  r.timestamp = j.contains("timestamp") ? detail::get_as<std::string>(j, "timestamp") : "";
  return r;
}

inline AtlasRecord make_record(const StarSpec& spec, const StarRing& S, const std::string& timestamp) {
  return AtlasRecord{S.ring().label(), S.involution().label(), S.ring().order(), spec,
                     to_json(make_report(S)), timestamp};
}

namespace detail {

/// Standard involutions that apply to a construction.
inline std::vector<InvExpr> standard_involutions(const RingExpr& e, const FiniteRing& R) {
  using K = RingExpr::Kind;
  std::vector<InvExpr> out;
  if (is_commutative(R).holds) out.push_back(InvExpr::identity());
  if (e.kind == K::Product && same_expr(*e.left, *e.right)) out.push_back(InvExpr::swap());
  if (e.kind == K::GF4) out.push_back(InvExpr::frobenius());
  if (e.kind == K::UpperTriangular) out.push_back(InvExpr::antidiagonal());
  if (e.kind == K::Matrix || e.kind == K::ZeroPairing) out.push_back(InvExpr::transpose());
  return out;
}

inline std::vector<RingExpr> sweep_rings(std::size_t max_order) {
  using R = RingExpr;
  std::vector<R> out;
  for (unsigned n = 2; n <= max_order; ++n) out.push_back(R::zn(n));
  if (max_order >= 4) out.push_back(R::gf4());
  for (unsigned n = 2; n * n <= max_order; ++n)
    for (unsigned m = n; n * m <= max_order; ++m) out.push_back(R::product(R::zn(n), R::zn(m)));
  for (unsigned n = 2; n * n * n <= max_order; ++n) out.push_back(R::upper_triangular(R::zn(n), 2));
  for (unsigned n = 2; n * n * n * n <= max_order; ++n) {
    out.push_back(R::matrix(R::zn(n), 2));
    out.push_back(R::zero_pairing(R::zn(n)));
  }
  return out;
}

/// Replace each ring's involutions by the enumerated ones when small enough.
inline std::vector<StarSpec> expand_involutions(const std::vector<StarSpec>& specs, const Caps& caps) {
  std::vector<StarSpec> out;
  std::vector<std::string> done;
  for (const auto& spec : specs) {
    const std::string key = spec.ring.label();
    if (std::find(done.begin(), done.end(), key) != done.end()) continue;
    const auto R = evaluate(spec.ring, caps);
    if (R.order() > caps.involution) {
      for (const auto& other : specs)
        if (other.ring.label() == key) out.push_back(other);
    } else {
      for (const auto& S : enumerate_involutions(R, caps))
        out.push_back(StarSpec{spec.ring, InvExpr::table(S.involution().map(), S.involution().label())});
    }
    done.push_back(key);
  }
  return out;
}

inline std::vector<StarSpec> task_specs(const SearchTask& task) {
  std::vector<StarSpec> specs;
  switch (task.source) {
    case SearchTask::Source::Corpus:
      specs = task.specs.empty() ? default_corpus_specs() : task.specs;
      break;
    case SearchTask::Source::Specs:
      specs = task.specs;
      break;
    case SearchTask::Source::Sweep:
      for (const auto& ring : sweep_rings(std::min(task.sweep_max_order, task.caps.order))) {
        const auto R = evaluate(ring, task.caps);
        for (auto& inv : standard_involutions(ring, R)) specs.push_back(StarSpec{ring, std::move(inv)});
      }
      break;
  }
  return task.all_involutions ? expand_involutions(specs, task.caps) : specs;
}

}  // namespace detail

/// Every (ring, involution) pair of the task's source whose report matches
/// the profile, in source order.
inline std::vector<AtlasRecord> run_profile_search(const SearchTask& task) {
  std::vector<AtlasRecord> out;
  for (const auto& spec : detail::task_specs(task)) {
    const auto S = build_star(spec, task.caps);
    const auto report = make_report(S);
    if (!task.profile.matches(report)) continue;
    out.push_back(AtlasRecord{S.ring().label(), S.involution().label(), S.ring().order(), spec,
                              to_json(report), task.timestamp});
  }
  return out;
}

/// M_k(base) with the transpose of each base involution, one record per
/// base. Gathers data only; nothing here characterizes the outcome.
inline std::vector<AtlasRecord> problem10_scan(const std::vector<StarSpec>& bases, unsigned k,
                                               const Caps& caps = Caps{}, const std::string& timestamp = "") {
  std::vector<AtlasRecord> out;
  for (const auto& base : bases) {
    const auto base_star = build_star(base, caps);
    if (!is_commutative(base_star.ring()).holds)
      throw NotApplicable("problem10 scan needs a commutative base: " + base_star.label());
    StarSpec spec{RingExpr::matrix(base.ring, k), InvExpr::transpose(base.involution)};
    out.push_back(make_record(spec, build_star(spec, caps), timestamp));
  }
  return out;
}

inline void persist_atlas(const std::vector<AtlasRecord>& records, std::ostream& sink) {
  for (const auto& r : records) sink << to_json(r).dump() << '\n';
  if (!sink) throw IoFailure("atlas write failed");
}

inline void persist_atlas(const std::vector<AtlasRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  persist_atlas(records, out);
}

/// Rebuilds a record's star ring, recomputes its report, and replays the
/// stored witnesses. Throws ReplayMismatch.
inline void replay_record(const AtlasRecord& record, const Caps& caps = Caps{}) {
  const std::string label = record.ring_label + "|" + record.involution_label;
  const auto S = build_star(record.spec, caps);
  if (S.ring().label() != record.ring_label || S.involution().label() != record.involution_label ||
      S.ring().order() != record.order)
    throw ReplayMismatch(label, "rebuilt labels or order differ");
  if (const auto failures = verify_report(S, record.report); !failures.empty())
    throw ReplayMismatch(label, failures.front());
  if (to_json(make_report(S)) != record.report) throw ReplayMismatch(label, "recomputed report differs");
}

/// Parses an atlas and replays a random sample of its records (rate 1.0
/// replays all). Throws SpecParseError, ReplayMismatch.
inline std::vector<AtlasRecord> load_atlas(std::istream& source, double sample_rate = 1.0,
                                           const Caps& caps = Caps{}, std::uint64_t seed = 0) {
  std::vector<AtlasRecord> out;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick(std::clamp(sample_rate, 0.0, 1.0));
  std::string line;
  std::size_t number = 0;
  while (std::getline(source, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto record = atlas_record_from_json(parse_json_text(line, "atlas line " + std::to_string(number)));
    if (pick(rng)) replay_record(record, caps);
    out.push_back(std::move(record));
  }
  return out;
}

inline std::vector<AtlasRecord> load_atlas(const std::string& path, double sample_rate = 1.0,
                                           const Caps& caps = Caps{}, std::uint64_t seed = 0) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path);
  return load_atlas(in, sample_rate, caps, seed);
}

}  // namespace ringlab
