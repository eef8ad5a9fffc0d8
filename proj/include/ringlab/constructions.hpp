#pragma once

/**
 * @file constructions.hpp
 * @brief Standard finite rings, their standard involutions, and the corpus.
 *
 * Rings are described by a small expression tree (RingExpr) and evaluated to
 * validated tables. Matrix-like rings index their elements row-major
 * lexicographically over the stored entries, first entry most significant,
 * so [[a,b],[0,c]] over Z2 has index 4a + 2b + c.
 *
 * Kinds:
 *   zn(n)                  Z/nZ
 *   gf4                    field {0, 1, t, t+1}, t^2 = t + 1, index c0 + 2 c1
 *   matrix(base, k)        all k x k matrices
 *   upper_triangular(b, k) k x k upper triangular matrices
 *   product(l, r)          componentwise, index i_l + |l| * i_r
 *   zero_pairing(base)     [[a, b], [c, d]] with the off-diagonal products
 *                          b·c and c·b forced to zero; its radical is the
 *                          off-diagonal part and squares to zero
 *   tables                 raw tables
 */

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/caps.hpp"
#include "ringlab/core_ring.hpp"
#include "ringlab/star.hpp"

namespace ringlab {

struct RingExpr {
  enum class Kind { Zn, GF4, Matrix, UpperTriangular, Product, ZeroPairing, Tables };

  Kind kind = Kind::Zn;
  unsigned n = 2;  // modulus for Zn
  unsigned k = 2;  // matrix size
  std::shared_ptr<const RingExpr> base;
  std::shared_ptr<const RingExpr> left;
  std::shared_ptr<const RingExpr> right;
  // Tables kind only.
  Table add;
  Table mul;
  std::uint32_t zero = 0;
  std::uint32_t one = 1;
  std::string tables_label = "tables";

  static RingExpr zn(unsigned n) {
    RingExpr e;
    e.kind = Kind::Zn;
    e.n = n;
    return e;
  }
  static RingExpr gf4() {
    RingExpr e;
    e.kind = Kind::GF4;
    return e;
  }
  static RingExpr matrix(RingExpr base, unsigned k) {
    RingExpr e;
    e.kind = Kind::Matrix;
    e.k = k;
    e.base = std::make_shared<const RingExpr>(std::move(base));
    return e;
  }
  static RingExpr upper_triangular(RingExpr base, unsigned k) {
    RingExpr e = matrix(std::move(base), k);
    e.kind = Kind::UpperTriangular;
    return e;
  }
  static RingExpr product(RingExpr l, RingExpr r) {
    RingExpr e;
    e.kind = Kind::Product;
    e.left = std::make_shared<const RingExpr>(std::move(l));
    e.right = std::make_shared<const RingExpr>(std::move(r));
    return e;
  }
  static RingExpr zero_pairing(RingExpr base) {
    RingExpr e;
    e.kind = Kind::ZeroPairing;
    e.base = std::make_shared<const RingExpr>(std::move(base));
    return e;
  }
  static RingExpr tables(Table add, Table mul, std::uint32_t zero, std::uint32_t one,
                         std::string label = "tables") {
    RingExpr e;
    e.kind = Kind::Tables;
    e.add = std::move(add);
    e.mul = std::move(mul);
    e.zero = zero;
    e.one = one;
    e.tables_label = std::move(label);
    return e;
  }

  /// Human-readable construction string, e.g. "T2(Z2)" or "(Z2xZ2)xZ3".
  std::string label() const {
    switch (kind) {
      case Kind::Zn: return "Z" + std::to_string(n);
      case Kind::GF4: return "GF4";
      case Kind::Matrix: return "M" + std::to_string(k) + "(" + base->label() + ")";
      case Kind::UpperTriangular: return "T" + std::to_string(k) + "(" + base->label() + ")";
      case Kind::ZeroPairing: return "K2(" + base->label() + ")";
      case Kind::Product: {
        auto wrap = [](const RingExpr& e) {
          return e.kind == Kind::Product ? "(" + e.label() + ")" : e.label();
        };
        return wrap(*left) + "x" + wrap(*right);
      }
      case Kind::Tables: return tables_label;
    }
    return "?";
  }
};

struct InvExpr {
  enum class Kind { Identity, Swap, Transpose, Antidiagonal, Frobenius, Table };

  Kind kind = Kind::Identity;
  /// Entrywise involution used by transpose; identity when absent.
  std::shared_ptr<const InvExpr> base;
  std::vector<std::uint32_t> map;
  std::string table_label = "table";

  static InvExpr identity() { return InvExpr{}; }
  static InvExpr swap() {
    InvExpr e;
    e.kind = Kind::Swap;
    return e;
  }
  static InvExpr transpose(std::optional<InvExpr> base = std::nullopt) {
    InvExpr e;
    e.kind = Kind::Transpose;
    if (base) e.base = std::make_shared<const InvExpr>(std::move(*base));
    return e;
  }
  static InvExpr antidiagonal() {
    InvExpr e;
    e.kind = Kind::Antidiagonal;
    return e;
  }
  static InvExpr frobenius() {
    InvExpr e;
    e.kind = Kind::Frobenius;
    return e;
  }
  static InvExpr table(std::vector<std::uint32_t> map, std::string label = "table") {
    InvExpr e;
    e.kind = Kind::Table;
    e.map = std::move(map);
    e.table_label = std::move(label);
    return e;
  }

  std::string label() const {
    switch (kind) {
      case Kind::Identity: return "identity";
      case Kind::Swap: return "swap";
      case Kind::Transpose:
        return base && base->kind != Kind::Identity ? "transpose(" + base->label() + ")" : "transpose";
      case Kind::Antidiagonal: return "antidiagonal";
      case Kind::Frobenius: return "frobenius";
      case Kind::Table: return table_label;
    }
    return "?";
  }
};

/// A ring expression paired with an involution expression.
struct StarSpec {
  RingExpr ring;
  InvExpr involution;

  std::string label() const { return ring.label() + "|" + involution.label(); }
};

namespace detail {

using BinaryOp = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

inline FiniteRing tabulate(std::size_t order, const BinaryOp& add, const BinaryOp& mul,
                           std::uint32_t zero, std::uint32_t one, std::string label) {
  Table a(order, std::vector<std::uint32_t>(order));
  Table m(order, std::vector<std::uint32_t>(order));
  for (std::uint32_t i = 0; i < order; ++i)
    for (std::uint32_t j = 0; j < order; ++j) {
      a[i][j] = add(i, j);
      m[i][j] = mul(i, j);
    }
  return build_ring(a, m, zero, one, std::move(label));
}

inline std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    result *= base;
    if (result > cap) throw CapExceeded(result, cap);
  }
  return result;
}

/// Tuples of base elements packed into a single index, first entry most
/// significant.
struct EntryCodec {
  std::size_t q = 0;
  std::size_t width = 0;

  std::vector<std::uint32_t> decode(std::uint32_t index) const {
    std::vector<std::uint32_t> out(width);
    for (std::size_t i = width; i-- > 0;) {
      out[i] = static_cast<std::uint32_t>(index % q);
      index /= static_cast<std::uint32_t>(q);
    }
    return out;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& entries) const {
    std::uint32_t index = 0;
    for (auto v : entries) index = index * static_cast<std::uint32_t>(q) + v;
    return index;
  }
};

/// Positions (row, column) stored for a k x k matrix shape.
inline std::vector<std::pair<unsigned, unsigned>> matrix_positions(unsigned k, bool upper) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = upper ? i : 0; j < k; ++j) out.emplace_back(i, j);
  return out;
}

inline FiniteRing matrix_like(const FiniteRing& base, unsigned k, bool upper, std::size_t cap,
                              std::string label) {
  if (k == 0) throw std::invalid_argument("matrix size must be positive");
  const auto positions = matrix_positions(k, upper);
  const std::size_t order = checked_power(base.order(), positions.size(), cap);
  const EntryCodec codec{base.order(), positions.size()};
  std::vector<std::vector<int>> slot(k, std::vector<int>(k, -1));
  for (std::size_t s = 0; s < positions.size(); ++s)
    slot[positions[s].first][positions[s].second] = static_cast<int>(s);

  auto entry = [&](const std::vector<std::uint32_t>& m, unsigned i, unsigned j) {
    return slot[i][j] < 0 ? base.zero() : Element{m[slot[i][j]]};
  };
  auto add = [&](std::uint32_t x, std::uint32_t y) {
    auto a = codec.decode(x);
    const auto b = codec.decode(y);
    for (std::size_t s = 0; s < a.size(); ++s) a[s] = base.add(Element{a[s]}, Element{b[s]}).index;
    return codec.encode(a);
  };
  auto mul = [&](std::uint32_t x, std::uint32_t y) {
    const auto a = codec.decode(x);
    const auto b = codec.decode(y);
    std::vector<std::uint32_t> c(positions.size());
    for (std::size_t s = 0; s < positions.size(); ++s) {
      const auto [i, j] = positions[s];
      Element sum = base.zero();
      for (unsigned l = 0; l < k; ++l) sum = base.add(sum, base.mul(entry(a, i, l), entry(b, l, j)));
      c[s] = sum.index;
    }
    return codec.encode(c);
  };
  std::vector<std::uint32_t> zero(positions.size(), base.zero().index);
  std::vector<std::uint32_t> one = zero;
  for (std::size_t s = 0; s < positions.size(); ++s)
    if (positions[s].first == positions[s].second) one[s] = base.one().index;
  return tabulate(order, add, mul, codec.encode(zero), codec.encode(one), std::move(label));
}

}  // namespace detail

inline FiniteRing zn(unsigned n, const Caps& caps = Caps{}) {
  if (n < 2) throw std::invalid_argument("zn: modulus must be at least 2");
  enforce_cap(n, caps.order);
  return detail::tabulate(
      n, [n](std::uint32_t a, std::uint32_t b) { return (a + b) % n; },
      [n](std::uint32_t a, std::uint32_t b) { return (a * b) % n; }, 0, 1, "Z" + std::to_string(n));
}

inline FiniteRing gf4() {
  auto mul = [](std::uint32_t a, std::uint32_t b) {
    // (a0 + a1 t)(b0 + b1 t) with t^2 = t + 1 over Z2
    const std::uint32_t a0 = a & 1U, a1 = a >> 1U, b0 = b & 1U, b1 = b >> 1U;
    const std::uint32_t tt = a1 & b1;
    const std::uint32_t c0 = (a0 & b0) ^ tt;
    const std::uint32_t c1 = (a0 & b1) ^ (a1 & b0) ^ tt;
    return c0 | (c1 << 1U);
  };
  return detail::tabulate(4, [](std::uint32_t a, std::uint32_t b) { return a ^ b; }, mul, 0, 1, "GF4");
}

inline FiniteRing upper_triangular(const FiniteRing& base, unsigned k, const Caps& caps = Caps{}) {
  return detail::matrix_like(base, k, true, caps.order, "T" + std::to_string(k) + "(" + base.label() + ")");
}

inline FiniteRing matrix_ring(const FiniteRing& base, unsigned k, const Caps& caps = Caps{}) {
  return detail::matrix_like(base, k, false, caps.order, "M" + std::to_string(k) + "(" + base.label() + ")");
}

inline FiniteRing product(const FiniteRing& left, const FiniteRing& right, const Caps& caps = Caps{}) {
  const std::size_t order = left.order() * right.order();
  enforce_cap(order, caps.order);
  const auto l = static_cast<std::uint32_t>(left.order());
  auto split = [l](std::uint32_t x) { return std::pair{Element{x % l}, Element{x / l}}; };
  auto pack = [l](Element a, Element b) { return a.index + l * b.index; };
  auto add = [&](std::uint32_t x, std::uint32_t y) {
    const auto [a, b] = split(x);
    const auto [c, d] = split(y);
    return pack(left.add(a, c), right.add(b, d));
  };
  auto mul = [&](std::uint32_t x, std::uint32_t y) {
    const auto [a, b] = split(x);
    const auto [c, d] = split(y);
    return pack(left.mul(a, c), right.mul(b, d));
  };
  auto wrap = [](const std::string& s) { return s.find('x') != std::string::npos ? "(" + s + ")" : s; };
  return detail::tabulate(order, add, mul, pack(left.zero(), right.zero()), pack(left.one(), right.one()),
                          wrap(left.label()) + "x" + wrap(right.label()));
}

/// [[a, b], [c, d]] over a commutative base with
/// [[a,b],[c,d]]·[[a',b'],[c',d']] = [[aa', ab' + bd'], [ca' + dc', dd']].
inline FiniteRing zero_pairing(const FiniteRing& base, const Caps& caps = Caps{}) {
  if (!is_commutative(base).holds) throw NotApplicable("zero_pairing needs a commutative base");
  const std::size_t order = detail::checked_power(base.order(), 4, caps.order);
  const detail::EntryCodec codec{base.order(), 4};
  auto add = [&](std::uint32_t x, std::uint32_t y) {
    auto a = codec.decode(x);
    const auto b = codec.decode(y);
    for (std::size_t s = 0; s < 4; ++s) a[s] = base.add(Element{a[s]}, Element{b[s]}).index;
    return codec.encode(a);
  };
  auto mul = [&](std::uint32_t x, std::uint32_t y) {
    const auto u = codec.decode(x);
    const auto w = codec.decode(y);
    auto M = [&](std::uint32_t p, std::uint32_t q) { return base.mul(Element{p}, Element{q}); };
    auto A = [&](Element p, Element q) { return base.add(p, q).index; };
    return codec.encode({M(u[0], w[0]).index, A(M(u[0], w[1]), M(u[1], w[3])),
                         A(M(u[2], w[0]), M(u[3], w[2])), M(u[3], w[3]).index});
  };
  const auto z = base.zero().index, o = base.one().index;
  return detail::tabulate(order, add, mul, codec.encode({z, z, z, z}), codec.encode({o, z, z, o}),
                          "K2(" + base.label() + ")");
}

/// Evaluates a ring expression, enforcing the order cap at every node.
inline FiniteRing evaluate(const RingExpr& expr, const Caps& caps = Caps{}) {
  switch (expr.kind) {
    case RingExpr::Kind::Zn: return zn(expr.n, caps);
    case RingExpr::Kind::GF4: return gf4();
    case RingExpr::Kind::Matrix: return matrix_ring(evaluate(*expr.base, caps), expr.k, caps);
    case RingExpr::Kind::UpperTriangular:
      return upper_triangular(evaluate(*expr.base, caps), expr.k, caps);
    case RingExpr::Kind::Product:
      return product(evaluate(*expr.left, caps), evaluate(*expr.right, caps), caps).with_label(expr.label());
    case RingExpr::Kind::ZeroPairing: return zero_pairing(evaluate(*expr.base, caps), caps);
    case RingExpr::Kind::Tables: {
      enforce_cap(expr.add.size(), caps.order);
      return build_ring(expr.add, expr.mul, expr.zero, expr.one, expr.tables_label);
    }
  }
  throw std::logic_error("unknown ring kind");
}

namespace detail {

inline bool same_expr(const RingExpr& a, const RingExpr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == RingExpr::Kind::Tables)
    return a.add == b.add && a.mul == b.mul && a.zero == b.zero && a.one == b.one;
  return a.label() == b.label();
}

/// Map of the involution described by `inv` on the ring built from `ring`.
inline std::vector<std::uint32_t> involution_map(const InvExpr& inv, const RingExpr& ring,
                                                 const FiniteRing& R, const Caps& caps) {
  using RK = RingExpr::Kind;
  std::vector<std::uint32_t> map(R.order());
  switch (inv.kind) {
    case InvExpr::Kind::Identity: {
      if (const auto c = is_commutative(R); !c.holds)
        throw NotApplicable("identity involution needs a commutative ring; " +
                            std::to_string(c.counterexample->first.index) + " and " +
                            std::to_string(c.counterexample->second.index) + " do not commute");
      for (std::uint32_t i = 0; i < map.size(); ++i) map[i] = i;
      return map;
    }
    case InvExpr::Kind::Swap: {
      if (ring.kind != RK::Product || !same_expr(*ring.left, *ring.right))
        throw NotApplicable("swap needs a product S x S with equal factors");
      const auto l = static_cast<std::uint32_t>(evaluate(*ring.left, caps).order());
      for (std::uint32_t i = 0; i < map.size(); ++i) map[i] = i / l + l * (i % l);
      return map;
    }
    case InvExpr::Kind::Frobenius: {
      if (ring.kind != RK::GF4) throw NotApplicable("frobenius needs GF4");
      for (auto a : R.elements()) map[a.index] = R.mul(a, a).index;
      return map;
    }
    case InvExpr::Kind::Antidiagonal: {
      if (ring.kind != RK::UpperTriangular) throw NotApplicable("antidiagonal needs an upper triangular ring");
      const auto base = evaluate(*ring.base, caps);
      if (!is_commutative(base).holds) throw NotApplicable("antidiagonal needs a commutative base");
      const unsigned k = ring.k;
      const auto positions = matrix_positions(k, true);
      const EntryCodec codec{base.order(), positions.size()};
      for (std::uint32_t x = 0; x < map.size(); ++x) {
        const auto m = codec.decode(x);
        std::vector<std::uint32_t> out(m.size());
        // (i, j) -> (k-1-j, k-1-i)
        for (std::size_t s = 0; s < positions.size(); ++s) {
          const auto [i, j] = positions[s];
          const auto target = std::pair{k - 1 - j, k - 1 - i};
          for (std::size_t t = 0; t < positions.size(); ++t)
            if (positions[t] == target) out[t] = m[s];
        }
        map[x] = codec.encode(out);
      }
      return map;
    }
    case InvExpr::Kind::Transpose: {
      if (ring.kind != RK::Matrix && ring.kind != RK::ZeroPairing)
        throw NotApplicable("transpose needs a matrix ring");
      const auto base = evaluate(*ring.base, caps);
      const InvExpr base_inv = inv.base ? *inv.base : InvExpr::identity();
      const auto base_map = involution_map(base_inv, *ring.base, base, caps);
      const unsigned k = ring.kind == RK::Matrix ? ring.k : 2;
      const EntryCodec codec{base.order(), static_cast<std::size_t>(k) * k};
      for (std::uint32_t x = 0; x < map.size(); ++x) {
        const auto m = codec.decode(x);
        std::vector<std::uint32_t> out(m.size());
        for (unsigned i = 0; i < k; ++i)
          for (unsigned j = 0; j < k; ++j) out[i * k + j] = base_map[m[j * k + i]];
        map[x] = codec.encode(out);
      }
      return map;
    }
    case InvExpr::Kind::Table:
      return inv.map;
  }
  throw std::logic_error("unknown involution kind");
}

}  // namespace detail

/// Validated involution described by `inv` on `ring`. Throws NotApplicable
/// when the description does not fit the construction, AxiomViolation when
/// the resulting map is not an involution.
inline StarRing involution_for(const InvExpr& inv, const RingExpr& ring, const FiniteRing& R,
                               const Caps& caps = Caps{}) {
  return validate_involution(R, detail::involution_map(inv, ring, R, caps), inv.label());
}

inline StarRing build_star(const StarSpec& spec, const Caps& caps = Caps{}) {
  return involution_for(spec.involution, spec.ring, evaluate(spec.ring, caps), caps);
}

/// T2(Z2) with [[a,b],[0,c]]* = [[c,b],[0,a]].
inline StarSpec example6_spec() {
  return StarSpec{RingExpr::upper_triangular(RingExpr::zn(2), 2), InvExpr::antidiagonal()};
}

inline StarRing example6() { return build_star(example6_spec()); }

struct CorpusItem {
  StarSpec spec;
  StarRing star;
};

/// Specs of the default corpus, in corpus order.
inline std::vector<StarSpec> default_corpus_specs() {
  using R = RingExpr;
  using I = InvExpr;
  std::vector<StarSpec> out;
  for (unsigned n : {2U, 3U, 4U, 6U, 8U, 9U}) out.push_back({R::zn(n), I::identity()});
  for (unsigned n : {2U, 3U}) {
    out.push_back({R::product(R::zn(n), R::zn(n)), I::swap()});
    out.push_back({R::product(R::zn(n), R::zn(n)), I::identity()});
  }
  out.push_back({R::gf4(), I::identity()});
  out.push_back({R::gf4(), I::frobenius()});
  out.push_back({R::upper_triangular(R::zn(2), 2), I::antidiagonal()});
  out.push_back({R::upper_triangular(R::zn(3), 2), I::antidiagonal()});
  out.push_back({R::matrix(R::zn(2), 2), I::transpose()});
  out.push_back({R::matrix(R::zn(3), 2), I::transpose()});
  out.push_back({R::zero_pairing(R::zn(2)), I::transpose()});
  return out;
}

inline std::vector<CorpusItem> build_corpus(const std::vector<StarSpec>& specs, const Caps& caps = Caps{}) {
  std::vector<CorpusItem> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) out.push_back(CorpusItem{spec, build_star(spec, caps)});
  return out;
}

inline std::vector<CorpusItem> default_corpus(const Caps& caps = Caps{}) {
  return build_corpus(default_corpus_specs(), caps);
}

}  // namespace ringlab
