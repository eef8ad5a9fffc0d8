#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/core_ring.hpp"

using namespace ringlab;

namespace {

std::set<std::uint32_t> as_set(const ElementSet& s) {
  const auto v = s.indices();
  return {v.begin(), v.end()};
}

Table mod_table(unsigned n, bool multiply) {
  Table t(n, std::vector<std::uint32_t>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) t[i][j] = multiply ? (i * j) % n : (i + j) % n;
  return t;
}

// T2(Z2) indices: [[a,b],[0,c]] -> 4a + 2b + c.
constexpr Element kT2Nil{2};    // [[0,1],[0,0]]
constexpr Element kT2E11{4};    // [[1,0],[0,0]]
constexpr Element kT2E22{1};    // [[0,0],[0,1]]

}  // namespace

// =============================================================================
// build_ring
// =============================================================================

TEST(BuildRing, AcceptsZ2AndZ4) {
  const auto z2 = build_ring(mod_table(2, false), mod_table(2, true), 0, 1, "Z2");
  EXPECT_EQ(z2.order(), 2u);
  const auto z4 = build_ring(mod_table(4, false), mod_table(4, true), 0, 1, "Z4");
  EXPECT_EQ(z4.order(), 4u);
  EXPECT_EQ(z4.mul(Element{2}, Element{3}), Element{2});
  EXPECT_EQ(z4.neg(Element{1}), Element{3});
}

TEST(BuildRing, BrokenIdentityIsReported) {
  auto mul = mod_table(2, true);
  mul[1][1] = 0;
  try {
    build_ring(mod_table(2, false), mul, 0, 1);
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& v) {
    EXPECT_EQ(v.axiom(), "multiplicative-identity");
    EXPECT_EQ(v.witness(), (std::vector<std::uint32_t>{1, 1}));
  }
}

TEST(BuildRing, IdentityEqualsZeroRejected) {
  EXPECT_THROW(build_ring(mod_table(2, false), mod_table(2, true), 0, 0), IdentityEqualsZero);
  EXPECT_THROW(build_ring({{0}}, {{0}}, 0, 0), IdentityEqualsZero);
}

TEST(BuildRing, MalformedTablesRejected) {
  EXPECT_THROW(build_ring({}, {}, 0, 1), InvalidTables);
  EXPECT_THROW(build_ring({{0, 1}, {1, 0}}, {{0, 0}}, 0, 1), InvalidTables);
  EXPECT_THROW(build_ring({{0, 1}, {1, 2}}, mod_table(2, true), 0, 1), InvalidTables);
}

TEST(BuildRing, NonDistributiveTablesRejected) {
  // Z3 addition with a multiplication that keeps 1 as identity but is not
  // distributive: 2*2 = 2.
  auto mul = mod_table(3, true);
  mul[2][2] = 2;
  EXPECT_THROW(build_ring(mod_table(3, false), mul, 0, 1), AxiomViolation);
}

// =============================================================================
// pow / power_profile
// =============================================================================

TEST(Pow, Examples) {
  const auto z4 = zn(4);
  EXPECT_EQ(pow(z4, Element{2}, 2), Element{0});
  for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(pow(z4, z4.one(), n), z4.one());
  const auto t2 = upper_triangular(zn(2), 2);
  EXPECT_EQ(pow(t2, kT2Nil, 2), t2.zero());
  EXPECT_THROW(pow(z4, Element{1}, 0), std::invalid_argument);
}

TEST(Pow, AgreesWithRepeatedProduct) {
  for (const auto& R : {zn(9), upper_triangular(zn(3), 2), matrix_ring(zn(2), 2)}) {
    for (auto a : R.elements()) {
      Element x = a;
      for (unsigned n = 1; n <= 12; ++n) {
        ASSERT_EQ(pow(R, a, n), x) << R.label() << " a=" << a.index << " n=" << n;
        x = R.mul(x, a);
      }
    }
  }
}

TEST(PowerProfile, Examples) {
  const auto z4 = zn(4);
  auto p = power_profile(z4, z4.one());
  EXPECT_EQ(p.preperiod, 0u);
  EXPECT_EQ(p.period, 1u);
  p = power_profile(z4, Element{2});
  EXPECT_EQ(p.preperiod, 1u);
  EXPECT_EQ(p.period, 1u);
  p = power_profile(z4, Element{3});
  EXPECT_EQ(p.preperiod, 0u);
  EXPECT_EQ(p.period, 2u);
}

TEST(PowerProfile, MinimalAndBounded) {
  for (const auto& R : {zn(8), zn(9), gf4(), upper_triangular(zn(3), 2), matrix_ring(zn(3), 2)}) {
    for (auto a : R.elements()) {
      const auto p = power_profile(R, a);
      ASSERT_LE(p.preperiod + p.period, R.order());
      const unsigned i = p.preperiod + 1;
      ASSERT_EQ(pow(R, a, i + p.period), pow(R, a, i));
      // No earlier repetition among a^1 .. a^(pre+per).
      std::set<std::uint32_t> seen;
      for (unsigned k = 1; k <= p.preperiod + p.period; ++k) ASSERT_TRUE(seen.insert(pow(R, a, k).index).second);
    }
  }
}

// =============================================================================
// structural sets
// =============================================================================

TEST(Units, Z4AndT2) {
  EXPECT_EQ(as_set(units(zn(4)).members()), (std::set<std::uint32_t>{1, 3}));

  const auto t2 = upper_triangular(zn(2), 2);
  const auto mats = oracle::all_t2(2);
  auto mul = [](const oracle::Mat& a, const oracle::Mat& b) { return oracle::mul(a, b, 2); };
  const auto expected = oracle::units(mats, oracle::identity(2), mul);
  EXPECT_EQ(as_set(units(t2).members()), expected);
  // [[1,b],[0,1]] for b in {0,1}
  EXPECT_EQ(expected, (std::set<std::uint32_t>{5, 7}));
}

TEST(Units, InversesAreTwoSided) {
  for (const auto& R : {zn(9), matrix_ring(zn(2), 2), upper_triangular(zn(3), 2)}) {
    const auto U = units(R);
    EXPECT_TRUE(U.contains(R.one()));
    for (auto u : U.members().elements()) {
      const auto inv = U.inverse(u);
      ASSERT_TRUE(inv.has_value());
      EXPECT_EQ(R.mul(u, *inv), R.one());
      EXPECT_EQ(R.mul(*inv, u), R.one());
    }
  }
}

TEST(Idempotents, Examples) {
  const auto t2 = upper_triangular(zn(2), 2);
  auto mul = [](const oracle::Mat& a, const oracle::Mat& b) { return oracle::mul(a, b, 2); };
  const auto expected = oracle::idempotents(oracle::all_t2(2), mul);
  EXPECT_EQ(expected.size(), 6u);
  EXPECT_EQ(as_set(idempotents(t2)), expected);
  EXPECT_EQ(idempotents(product(zn(2), zn(2))).size(), 4u);
  for (const auto& R : {zn(6), gf4(), matrix_ring(zn(2), 2)}) {
    EXPECT_TRUE(idempotents(R).contains(R.zero()));
    EXPECT_TRUE(idempotents(R).contains(R.one()));
  }
}

TEST(Nilpotents, Examples) {
  EXPECT_EQ(as_set(nilpotents(zn(4))), (std::set<std::uint32_t>{0, 2}));
  EXPECT_EQ(as_set(nilpotents(gf4())), (std::set<std::uint32_t>{0}));
  auto mul = [](const oracle::Mat& a, const oracle::Mat& b) { return oracle::mul(a, b, 2); };
  const auto expected = oracle::nilpotents(oracle::all_t2(2), oracle::zero(2), mul);
  EXPECT_EQ(expected, (std::set<std::uint32_t>{0, kT2Nil.index}));
  EXPECT_EQ(as_set(nilpotents(upper_triangular(zn(2), 2))), expected);
  EXPECT_EQ(nilpotency_index(zn(8), Element{2}), 3u);
  EXPECT_EQ(nilpotency_index(zn(8), Element{0}), 1u);
  EXPECT_FALSE(nilpotency_index(zn(8), Element{3}).has_value());
}

// =============================================================================
// ideals
// =============================================================================

TEST(LeftIdeal, Examples) {
  const auto t2 = upper_triangular(zn(2), 2);
  EXPECT_EQ(as_set(left_ideal(t2, {t2.zero()}).members), (std::set<std::uint32_t>{0}));
  EXPECT_EQ(left_ideal(t2, {t2.one()}).members.size(), t2.order());
  EXPECT_EQ(as_set(left_ideal(t2, {kT2Nil}).members), (std::set<std::uint32_t>{0, kT2Nil.index}));
}

TEST(LeftIdeal, PrincipalClosureEqualsImage) {
  for (const auto& item : default_corpus()) {
    const auto& R = item.star.ring();
    for (auto a : R.elements())
      ASSERT_EQ(left_ideal(R, {a}).members, left_multiples(R, a)) << R.label() << " a=" << a.index;
  }
}

TEST(LeftIdeal, ClosureIsALeftIdeal) {
  const auto R = matrix_ring(zn(2), 2);
  for (auto a : R.elements())
    for (auto b : R.elements()) {
      if (b < a) continue;
      const auto I = left_ideal(R, {a, b}).members;
      ASSERT_TRUE(I.contains(a) && I.contains(b));
      for (auto x : I.elements()) {
        for (auto y : I.elements()) ASSERT_TRUE(I.contains(R.add(x, y)));
        for (auto r : R.elements()) ASSERT_TRUE(I.contains(R.mul(r, x)));
      }
    }
}

TEST(JacobsonRadical, Examples) {
  EXPECT_EQ(as_set(jacobson_radical(zn(4)).members), (std::set<std::uint32_t>{0, 2}));
  EXPECT_EQ(as_set(jacobson_radical(upper_triangular(zn(2), 2)).members),
            (std::set<std::uint32_t>{0, kT2Nil.index}));
  EXPECT_EQ(as_set(jacobson_radical(matrix_ring(zn(2), 2)).members), (std::set<std::uint32_t>{0}));
}

TEST(JacobsonRadicalOracle, Examples) {
  EXPECT_EQ(as_set(jacobson_radical_oracle(zn(2)).members), (std::set<std::uint32_t>{0}));
  EXPECT_EQ(as_set(jacobson_radical_oracle(zn(4)).members), (std::set<std::uint32_t>{0, 2}));
  EXPECT_EQ(as_set(jacobson_radical_oracle(upper_triangular(zn(2), 2)).members),
            (std::set<std::uint32_t>{0, kT2Nil.index}));
  EXPECT_THROW(jacobson_radical_oracle(matrix_ring(zn(3), 2)), CapExceeded);
  EXPECT_NO_THROW(jacobson_radical_oracle(zn(9), 9));
}

TEST(JacobsonRadical, MatchesOracleAndIsNil) {
  for (const auto& item : default_corpus()) {
    const auto& R = item.star.ring();
    const auto J = jacobson_radical(R);
    for (auto j : J.members.elements()) EXPECT_TRUE(is_nilpotent(R, j)) << R.label();
    if (R.order() <= Caps{}.oracle) EXPECT_EQ(J.members, jacobson_radical_oracle(R).members) << R.label();
  }
}

// =============================================================================
// quotients
// =============================================================================

TEST(QuotientRing, ByZeroIdealKeepsTables) {
  const auto R = upper_triangular(zn(2), 2);
  ElementSet zero(R.order());
  zero.insert(R.zero());
  const auto q = quotient_ring(R, TwoSidedIdeal{zero});
  EXPECT_TRUE(q.ring.same_tables(R));
}

TEST(QuotientRing, Z4ModTwoIsZ2) {
  const auto R = zn(4);
  const auto q = quotient_ring(R, jacobson_radical(R));
  EXPECT_TRUE(q.ring.same_tables(zn(2)));
  EXPECT_EQ(q.representatives, (std::vector<Element>{Element{0}, Element{1}}));
  EXPECT_EQ(q.surjection, (std::vector<Element>{Element{0}, Element{1}, Element{0}, Element{1}}));
}

TEST(QuotientRing, T2ModRadicalIsBoolean) {
  const auto R = upper_triangular(zn(2), 2);
  const auto q = quotient_ring(R, jacobson_radical(R), "T2(Z2)/J");
  EXPECT_EQ(q.ring.order(), 4u);
  EXPECT_TRUE(is_commutative(q.ring).holds);
  EXPECT_EQ(idempotents(q.ring).size(), 4u);  // every element idempotent, as in Z2 x Z2
  // Cosets in order of smallest representative: 0, 1, 4, 5.
  EXPECT_EQ(q.representatives, (std::vector<Element>{Element{0}, Element{1}, Element{4}, Element{5}}));
  EXPECT_EQ(jacobson_radical(q.ring).members.size(), 1u);
}

TEST(QuotientRing, Errors) {
  const auto R = zn(4);
  ElementSet all(R.order());
  for (auto a : R.elements()) all.insert(a);
  EXPECT_THROW(quotient_ring(R, TwoSidedIdeal{all}), ImproperIdeal);
  ElementSet bogus(R.order());
  bogus.insert(Element{0});
  bogus.insert(Element{1});
  EXPECT_THROW(quotient_ring(R, TwoSidedIdeal{bogus}), InvalidIdeal);
}

TEST(QuotientRing, RadicalQuotientIsSemiprimitive) {
  for (const auto& item : default_corpus()) {
    const auto& R = item.star.ring();
    const auto q = quotient_ring(R, jacobson_radical(R));
    EXPECT_EQ(q.ring.order() * jacobson_radical(R).members.size(), R.order());
    EXPECT_EQ(jacobson_radical(q.ring).members.size(), 1u) << R.label();
  }
}

// =============================================================================
// abelian
// =============================================================================

TEST(Abelian, Examples) {
  EXPECT_TRUE(is_abelian_ring(zn(6)).holds);
  EXPECT_TRUE(is_abelian_ring(product(zn(2), zn(3))).holds);

  const auto t2 = upper_triangular(zn(2), 2);
  const auto v = is_abelian_ring(t2);
  ASSERT_FALSE(v.holds);
  // Smallest-index witness: e = [[0,0],[0,1]], r = [[0,1],[0,0]].
  EXPECT_EQ(v.counterexample->first, kT2E22);
  EXPECT_EQ(v.counterexample->second, kT2Nil);
  // The textbook pair e = [[1,0],[0,0]], r = [[0,1],[0,0]] also fails:
  // er = [[0,1],[0,0]], re = 0.
  EXPECT_EQ(t2.mul(kT2E11, kT2Nil), kT2Nil);
  EXPECT_EQ(t2.mul(kT2Nil, kT2E11), t2.zero());

  EXPECT_FALSE(is_abelian_ring(matrix_ring(zn(2), 2)).holds);
}
