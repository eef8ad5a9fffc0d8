#pragma once

/**
 * @file core_ring.hpp
 * @brief Finite unital rings given by dense addition and multiplication tables.
 *
 * A FiniteRing is immutable once built. build_ring() checks every ring axiom
 * exhaustively, so any FiniteRing in hand is a genuine associative unital ring
 * with 1 != 0. Copies share the underlying tables.
 *
 * The structural sets computed here (units, idempotents, nilpotents, principal
 * and generated left ideals, the Jacobson radical, quotients) are all exact
 * scans over the element set.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <ranges>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/caps.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

/// Index of an element inside the ring it belongs to.
struct Element {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const Element&) const = default;
};

/// Subset of the elements of a ring, stored as a membership mask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : mask_(universe, false) {}

  bool insert(Element e) {
    if (mask_[e.index]) return false;
    mask_[e.index] = true;
    ++count_;
    return true;
  }
  bool contains(Element e) const { return e.index < mask_.size() && mask_[e.index]; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  std::size_t universe() const noexcept { return mask_.size(); }
  const std::vector<bool>& mask() const noexcept { return mask_; }

  /// Members in increasing index order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(count_);
    for (std::uint32_t i = 0; i < mask_.size(); ++i)
      if (mask_[i]) out.push_back(Element{i});
    return out;
  }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::uint32_t i = 0; i < mask_.size(); ++i)
      if (mask_[i]) out.push_back(i);
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i] && !other.mask_[i]) return false;
    return true;
  }

  friend ElementSet intersect(const ElementSet& a, const ElementSet& b) {
    ElementSet out(a.universe());
    for (std::uint32_t i = 0; i < a.mask_.size(); ++i)
      if (a.mask_[i] && b.mask_[i]) out.insert(Element{i});
    return out;
  }

  bool operator==(const ElementSet& other) const { return mask_ == other.mask_; }

 private:
  std::vector<bool> mask_;
  std::size_t count_ = 0;
};

/// Square operation table indexed [row][column].
using Table = std::vector<std::vector<std::uint32_t>>;

class FiniteRing;
FiniteRing build_ring(const Table& add_table, const Table& mul_table, std::uint32_t zero,
                      std::uint32_t one, std::string label = "tables");

class FiniteRing {
 public:
  std::size_t order() const noexcept { return data_->order; }
  Element zero() const noexcept { return Element{data_->zero}; }
  Element one() const noexcept { return Element{data_->one}; }
  const std::string& label() const noexcept { return data_->label; }

  Element add(Element a, Element b) const { return Element{data_->add[a.index * order() + b.index]}; }
  Element mul(Element a, Element b) const { return Element{data_->mul[a.index * order() + b.index]}; }
  Element neg(Element a) const { return Element{data_->neg[a.index]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  /// All elements in increasing index order.
  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(order())) |
           std::views::transform([](std::uint32_t i) { return Element{i}; });
  }

  /// Row-major flattened tables.
  std::span<const std::uint32_t> add_table() const noexcept { return data_->add; }
  std::span<const std::uint32_t> mul_table() const noexcept { return data_->mul; }

  Table add_rows() const { return rows(data_->add); }
  Table mul_rows() const { return rows(data_->mul); }

  FiniteRing with_label(std::string label) const {
    auto copy = std::make_shared<Data>(*data_);
    copy->label = std::move(label);
    return FiniteRing(std::move(copy));
  }

  /// Same tables, same distinguished elements.
  bool same_tables(const FiniteRing& other) const {
    return order() == other.order() && data_->zero == other.data_->zero &&
           data_->one == other.data_->one && data_->add == other.data_->add &&
           data_->mul == other.data_->mul;
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<std::uint32_t> add;
    std::vector<std::uint32_t> mul;
    std::vector<std::uint32_t> neg;
    std::uint32_t zero = 0;
    std::uint32_t one = 0;
    std::string label;
  };

  explicit FiniteRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  Table rows(const std::vector<std::uint32_t>& flat) const {
    Table out(order(), std::vector<std::uint32_t>(order()));
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = 0; j < order(); ++j) out[i][j] = flat[i * order() + j];
    return out;
  }

  friend FiniteRing build_ring(const Table&, const Table&, std::uint32_t, std::uint32_t,
                               std::string);

  std::shared_ptr<const Data> data_;
};

/// Validates the tables against every ring axiom and returns the ring.
/// Throws InvalidTables, IdentityEqualsZero or AxiomViolation.
inline FiniteRing build_ring(const Table& add_table, const Table& mul_table, std::uint32_t zero,
                             std::uint32_t one, std::string label) {
  const std::size_t n = add_table.size();
  if (n == 0) throw InvalidTables("ring must have at least one element");
  auto check_shape = [n](const Table& t, const char* name) {
    if (t.size() != n) throw InvalidTables(std::string(name) + " table has wrong row count");
    for (const auto& row : t) {
      if (row.size() != n) throw InvalidTables(std::string(name) + " table is not square");
      for (auto v : row)
        if (v >= n) throw InvalidTables(std::string(name) + " table entry out of range");
    }
  };
  check_shape(add_table, "add");
  check_shape(mul_table, "mul");
  if (zero >= n || one >= n) throw InvalidTables("zero or one out of range");
  if (zero == one) throw IdentityEqualsZero();

  auto A = [&](std::uint32_t a, std::uint32_t b) { return add_table[a][b]; };
  auto M = [&](std::uint32_t a, std::uint32_t b) { return mul_table[a][b]; };
  const auto N = static_cast<std::uint32_t>(n);

  for (std::uint32_t a = 0; a < N; ++a)
    if (A(zero, a) != a || A(a, zero) != a) throw AxiomViolation("additive-identity", {zero, a});
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      if (A(a, b) != A(b, a)) throw AxiomViolation("additive-commutativity", {a, b});
  std::vector<std::uint32_t> neg(n);
  for (std::uint32_t a = 0; a < N; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < N && !found; ++b)
      if (A(a, b) == zero) {
        neg[a] = b;
        found = true;
      }
    if (!found) throw AxiomViolation("additive-inverse", {a});
  }
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      for (std::uint32_t c = 0; c < N; ++c)
        if (A(A(a, b), c) != A(a, A(b, c))) throw AxiomViolation("additive-associativity", {a, b, c});
  for (std::uint32_t a = 0; a < N; ++a)
    if (M(one, a) != a || M(a, one) != a) throw AxiomViolation("multiplicative-identity", {one, a});
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      for (std::uint32_t c = 0; c < N; ++c) {
        if (M(M(a, b), c) != M(a, M(b, c)))
          throw AxiomViolation("multiplicative-associativity", {a, b, c});
        if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
          throw AxiomViolation("left-distributivity", {a, b, c});
        if (M(A(a, b), c) != A(M(a, c), M(b, c)))
          throw AxiomViolation("right-distributivity", {a, b, c});
      }

  auto data = std::make_shared<FiniteRing::Data>();
  data->order = n;
  data->add.reserve(n * n);
  data->mul.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    data->add.insert(data->add.end(), add_table[i].begin(), add_table[i].end());
    data->mul.insert(data->mul.end(), mul_table[i].begin(), mul_table[i].end());
  }
  data->neg = std::move(neg);
  data->zero = zero;
  data->one = one;
  data->label = std::move(label);
  return FiniteRing(std::move(data));
}

/// n-fold product of a, n >= 1.
inline Element pow(const FiniteRing& R, Element a, unsigned n) {
  if (n == 0) throw std::invalid_argument("pow: exponent must be positive");
  Element result = R.one();
  Element base = a;
  while (n > 0) {
    if (n & 1U) result = R.mul(result, base);
    base = R.mul(base, base);
    n >>= 1U;
  }
  return result;
}

/// Shape of the power sequence a, a^2, a^3, ...: the first repetition is
/// a^(preperiod + 1 + period) = a^(preperiod + 1).
struct PowerProfile {
  Element base;
  unsigned preperiod = 0;
  unsigned period = 1;

  /// Exponents 1..bound() cover every distinct (a^n, a^(n+1)) pair.
  unsigned exponent_bound() const noexcept { return preperiod + period; }
};

inline PowerProfile power_profile(const FiniteRing& R, Element a) {
  std::vector<unsigned> first_seen(R.order(), 0);
  Element x = a;
  for (unsigned i = 1;; ++i) {
    if (unsigned j = first_seen[x.index]; j != 0) return PowerProfile{a, j - 1, i - j};
    first_seen[x.index] = i;
    x = R.mul(x, a);
  }
}

/// Smallest k with a^k = 0, if a is nilpotent.
inline std::optional<unsigned> nilpotency_index(const FiniteRing& R, Element a) {
  const auto profile = power_profile(R, a);
  Element x = a;
  for (unsigned k = 1; k <= profile.exponent_bound(); ++k) {
    if (x == R.zero()) return k;
    x = R.mul(x, a);
  }
  return std::nullopt;
}

inline bool is_nilpotent(const FiniteRing& R, Element a) { return nilpotency_index(R, a).has_value(); }

inline bool is_idempotent(const FiniteRing& R, Element e) { return R.mul(e, e) == e; }

/// U(R) with two-sided inverses.
class UnitGroup {
 public:
  explicit UnitGroup(const FiniteRing& R) : members_(R.order()), inverse_(R.order()) {
    for (auto a : R.elements())
      for (auto b : R.elements())
        if (R.mul(a, b) == R.one() && R.mul(b, a) == R.one()) {
          members_.insert(a);
          inverse_[a.index] = b;
          break;
        }
  }

  bool contains(Element a) const { return members_.contains(a); }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::optional<Element> inverse(Element a) const { return inverse_[a.index]; }

 private:
  ElementSet members_;
  std::vector<std::optional<Element>> inverse_;
};

inline UnitGroup units(const FiniteRing& R) { return UnitGroup(R); }

inline ElementSet idempotents(const FiniteRing& R) {
  ElementSet out(R.order());
  for (auto e : R.elements())
    if (is_idempotent(R, e)) out.insert(e);
  return out;
}

inline ElementSet nilpotents(const FiniteRing& R) {
  ElementSet out(R.order());
  for (auto a : R.elements())
    if (is_nilpotent(R, a)) out.insert(a);
  return out;
}

struct LeftIdeal {
  ElementSet members;
};

struct TwoSidedIdeal {
  ElementSet members;
};

/// Smallest left ideal containing the generators, by closure to a fixpoint.
inline LeftIdeal left_ideal(const FiniteRing& R, std::span<const Element> generators) {
  ElementSet members(R.order());
  std::vector<Element> queue;
  auto push = [&](Element x) {
    if (members.insert(x)) queue.push_back(x);
  };
  push(R.zero());
  for (auto g : generators) push(g);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    push(R.neg(x));
    for (auto r : R.elements()) push(R.mul(r, x));
    for (std::size_t j = 0; j <= head; ++j) push(R.add(x, queue[j]));
  }
  return LeftIdeal{std::move(members)};
}

inline LeftIdeal left_ideal(const FiniteRing& R, std::initializer_list<Element> generators) {
  return left_ideal(R, std::span<const Element>(generators.begin(), generators.size()));
}

/// Ra = {r·a : r in R}.
inline ElementSet left_multiples(const FiniteRing& R, Element a) {
  ElementSet out(R.order());
  for (auto r : R.elements()) out.insert(R.mul(r, a));
  return out;
}

/// aR = {a·r : r in R}.
inline ElementSet right_multiples(const FiniteRing& R, Element a) {
  ElementSet out(R.order());
  for (auto r : R.elements()) out.insert(R.mul(a, r));
  return out;
}

/// Additive subgroup absorbing multiplication on both sides.
inline bool is_two_sided_ideal(const FiniteRing& R, const ElementSet& s) {
  if (!s.contains(R.zero())) return false;
  const auto members = s.elements();
  for (auto x : members) {
    for (auto y : members)
      if (!s.contains(R.add(x, y))) return false;
    for (auto r : R.elements())
      if (!s.contains(R.mul(r, x)) || !s.contains(R.mul(x, r))) return false;
  }
  return true;
}

/// J(R) = {x : 1 - r·x is a unit for every r}.
inline TwoSidedIdeal jacobson_radical(const FiniteRing& R) {
  const UnitGroup U(R);
  ElementSet J(R.order());
  for (auto x : R.elements()) {
    bool in_radical = true;
    for (auto r : R.elements())
      if (!U.contains(R.sub(R.one(), R.mul(r, x)))) {
        in_radical = false;
        break;
      }
    if (in_radical) J.insert(x);
  }
  if (!is_two_sided_ideal(R, J)) throw CertificateFailure("Jacobson radical is not a two-sided ideal");
  return TwoSidedIdeal{std::move(J)};
}

/// Intersection of all maximal left ideals. Left ideals are enumerated from
/// every generating set of size <= 2 and saturated under sums; the maximal
/// proper ones are intersected.
inline TwoSidedIdeal jacobson_radical_oracle(const FiniteRing& R, std::size_t cap = Caps{}.oracle) {
  enforce_cap(R.order(), cap);
  std::set<std::vector<bool>> seen;
  std::vector<ElementSet> proper;
  auto record = [&](ElementSet s) {
    if (s.contains(R.one())) return;
    if (seen.insert(s.mask()).second) proper.push_back(std::move(s));
  };
  for (auto a : R.elements())
    for (auto b : R.elements()) {
      if (b < a) continue;
      record(left_ideal(R, {a, b}).members);
    }
  for (std::size_t i = 0; i < proper.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet sum(R.order());
      for (auto x : proper[i].elements())
        for (auto y : proper[j].elements()) sum.insert(R.add(x, y));
      record(std::move(sum));
    }

  ElementSet result(R.order());
  for (auto x : R.elements()) result.insert(x);
  for (const auto& candidate : proper) {
    bool maximal = true;
    for (const auto& other : proper)
      if (other.size() > candidate.size() && candidate.is_subset_of(other)) {
        maximal = false;
        break;
      }
    if (maximal) result = intersect(result, candidate);
  }
  return TwoSidedIdeal{std::move(result)};
}

struct QuotientRing {
  FiniteRing ring;
  /// Element of R -> element of R/I.
  std::vector<Element> surjection;
  /// Element of R/I -> smallest-index member of its coset in R.
  std::vector<Element> representatives;
};

/// R/I with cosets indexed by increasing representative.
inline QuotientRing quotient_ring(const FiniteRing& R, const TwoSidedIdeal& I, std::string label = "") {
  if (I.members.universe() != R.order() || !is_two_sided_ideal(R, I.members))
    throw InvalidIdeal("quotient_ring: not a two-sided ideal");
  if (I.members.contains(R.one())) throw ImproperIdeal();

  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> coset(R.order(), unassigned);
  std::vector<Element> reps;
  const auto members = I.members.elements();
  for (auto a : R.elements()) {
    if (coset[a.index] != unassigned) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(a);
    for (auto i : members) coset[R.add(a, i).index] = id;
  }

  const std::size_t q = reps.size();
  Table add(q, std::vector<std::uint32_t>(q));
  Table mul(q, std::vector<std::uint32_t>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      add[i][j] = coset[R.add(reps[i], reps[j]).index];
      mul[i][j] = coset[R.mul(reps[i], reps[j]).index];
    }
  if (label.empty()) label = R.label() + "/I";
  auto ring = build_ring(add, mul, coset[R.zero().index], coset[R.one().index], std::move(label));

  std::vector<Element> surjection;
  surjection.reserve(R.order());
  for (auto c : coset) surjection.push_back(Element{c});
  return QuotientRing{std::move(ring), std::move(surjection), std::move(reps)};
}

/// Outcome of a "these all commute" check; on failure the smallest pair
/// (x, r) with x·r != r·x.
struct CommutationVerdict {
  bool holds = true;
  std::optional<std::pair<Element, Element>> counterexample;
};

namespace detail {
inline CommutationVerdict commutes_with_all(const FiniteRing& R, const ElementSet& subjects) {
  for (auto x : subjects.elements())
    for (auto r : R.elements())
      if (R.mul(x, r) != R.mul(r, x)) return CommutationVerdict{false, std::pair{x, r}};
  return CommutationVerdict{};
}

inline ElementSet all_elements(const FiniteRing& R) {
  ElementSet out(R.order());
  for (auto a : R.elements()) out.insert(a);
  return out;
}
}  // namespace detail

inline CommutationVerdict is_commutative(const FiniteRing& R) {
  return detail::commutes_with_all(R, detail::all_elements(R));
}

/// Every idempotent is central.
inline CommutationVerdict is_abelian_ring(const FiniteRing& R) {
  return detail::commutes_with_all(R, idempotents(R));
}

}  // namespace ringlab
