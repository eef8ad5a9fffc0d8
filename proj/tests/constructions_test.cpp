#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ringlab/constructions.hpp"

using namespace ringlab;

namespace {

// Checks that index map phi: A -> B carries A's tables onto B's.
void expect_isomorphic_via(const FiniteRing& A, const FiniteRing& B, const std::vector<std::uint32_t>& phi) {
  ASSERT_EQ(A.order(), B.order());
  ASSERT_EQ(phi.size(), A.order());
  for (auto x : A.elements())
    for (auto y : A.elements()) {
      ASSERT_EQ(phi[A.add(x, y).index], B.add(Element{phi[x.index]}, Element{phi[y.index]}).index);
      ASSERT_EQ(phi[A.mul(x, y).index], B.mul(Element{phi[x.index]}, Element{phi[y.index]}).index);
    }
}

}  // namespace

TEST(Zn, Examples) {
  const auto z2 = zn(2);
  EXPECT_EQ(z2.order(), 2u);
  EXPECT_EQ(units(z2).size(), 1u);
  EXPECT_EQ(jacobson_radical(zn(4)).members.indices(), (std::vector<std::uint32_t>{0, 2}));
  EXPECT_EQ(jacobson_radical(zn(6)).members.indices(), (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(zn(9).label(), "Z9");
  EXPECT_THROW(zn(1), std::invalid_argument);
  Caps small;
  small.order = 8;
  EXPECT_THROW(zn(9, small), CapExceeded);
}

TEST(Gf4, FieldTables) {
  const auto F = gf4();
  const Element t{2}, t1{3};
  EXPECT_EQ(F.mul(t, t), t1);
  EXPECT_EQ(F.add(t, F.one()), t1);
  EXPECT_EQ(F.add(t, t), F.zero());
  EXPECT_EQ(units(F).size(), 3u);
  for (auto a : F.elements())
    if (a != F.zero()) EXPECT_TRUE(units(F).contains(a));
  EXPECT_NO_THROW(build_star({RingExpr::gf4(), InvExpr::frobenius()}));
  const auto S = build_star({RingExpr::gf4(), InvExpr::frobenius()});
  EXPECT_EQ(S.star(t), t1);
}

TEST(UpperTriangular, Orders) {
  EXPECT_EQ(upper_triangular(zn(2), 2).order(), 8u);
  EXPECT_EQ(upper_triangular(zn(3), 2).order(), 27u);
  EXPECT_TRUE(upper_triangular(zn(2), 1).same_tables(zn(2)));
}

TEST(UpperTriangular, MatchesMatrixArithmetic) {
  for (int q : {2, 3}) {
    const auto R = upper_triangular(zn(q), 2);
    for (auto x : R.elements())
      for (auto y : R.elements()) {
        const auto a = oracle::t2(x.index, q), b = oracle::t2(y.index, q);
        ASSERT_EQ(R.add(x, y).index, oracle::t2_index(oracle::add(a, b, q), q));
        ASSERT_EQ(R.mul(x, y).index, oracle::t2_index(oracle::mul(a, b, q), q));
      }
    EXPECT_EQ(R.one().index, oracle::t2_index(oracle::identity(2), q));
  }
}

TEST(MatrixRing, MatchesMatrixArithmetic) {
  for (int q : {2, 3}) {
    const auto R = matrix_ring(zn(q), 2);
    EXPECT_EQ(R.order(), static_cast<std::size_t>(q * q * q * q));
    for (auto x : R.elements())
      for (auto y : R.elements()) {
        const auto a = oracle::m2(x.index, q), b = oracle::m2(y.index, q);
        ASSERT_EQ(R.add(x, y).index, oracle::m2_index(oracle::add(a, b, q), q));
        ASSERT_EQ(R.mul(x, y).index, oracle::m2_index(oracle::mul(a, b, q), q));
      }
  }
}

TEST(MatrixRing, Examples) {
  const auto m = matrix_ring(zn(2), 2);
  EXPECT_EQ(m.order(), 16u);
  EXPECT_EQ(jacobson_radical(m).members.size(), 1u);
  EXPECT_TRUE(matrix_ring(zn(4), 1).same_tables(zn(4)));
  EXPECT_TRUE(matrix_ring(gf4(), 1).same_tables(gf4()));
  EXPECT_EQ(matrix_ring(zn(3), 2).order(), 81u);
  EXPECT_THROW(matrix_ring(zn(2), 3), CapExceeded);
  EXPECT_EQ(m.label(), "M2(Z2)");
}

TEST(MatrixRing, TransposeMatchesOracle) {
  const auto S = build_star({RingExpr::matrix(RingExpr::zn(3), 2), InvExpr::transpose()});
  for (auto x : S.ring().elements())
    ASSERT_EQ(S.star(x).index, oracle::m2_index(oracle::transpose(oracle::m2(x.index, 3)), 3));
}

TEST(MatrixRing, TransposeWithBaseInvolution) {
  // Over GF4 with Frobenius, [[a,b],[c,d]]* = [[a^2,c^2],[b^2,d^2]].
  Caps big;
  big.order = 256;
  const auto S = build_star(
      {RingExpr::matrix(RingExpr::gf4(), 2), InvExpr::transpose(InvExpr::frobenius())}, big);
  const auto F = gf4();
  auto sq = [&](std::uint32_t v) { return F.mul(Element{v}, Element{v}).index; };
  for (auto x : S.ring().elements()) {
    const std::uint32_t a = x.index / 64, b = (x.index / 16) % 4, c = (x.index / 4) % 4, d = x.index % 4;
    const std::uint32_t expected = sq(a) * 64 + sq(c) * 16 + sq(b) * 4 + sq(d);
    ASSERT_EQ(S.star(x).index, expected);
  }
  EXPECT_EQ(InvExpr::transpose(InvExpr::frobenius()).label(), "transpose(frobenius)");
}

TEST(Product, Z2xZ2IsBoolean) {
  const auto R = product(zn(2), zn(2));
  EXPECT_EQ(R.order(), 4u);
  for (auto a : R.elements()) EXPECT_EQ(R.mul(a, a), a);
  EXPECT_EQ(R.label(), "Z2xZ2");
  EXPECT_EQ(product(product(zn(2), zn(2)), zn(3)).label(), "(Z2xZ2)xZ3");
}

TEST(Product, Z2xZ3IsZ6) {
  const auto P = product(zn(2), zn(3));
  // (l, r) at index l + 2r corresponds to the x in Z6 with x = l mod 2, x = r mod 3.
  std::vector<std::uint32_t> phi(6);
  for (std::uint32_t x = 0; x < 6; ++x) phi[(x % 2) + 2 * (x % 3)] = x;
  expect_isomorphic_via(P, zn(6), phi);
}

TEST(Product, CommutesUpToTransport) {
  const auto A = zn(3), B = zn(4);
  const auto AB = product(A, B), BA = product(B, A);
  std::vector<std::uint32_t> phi(AB.order());
  for (std::uint32_t l = 0; l < 3; ++l)
    for (std::uint32_t r = 0; r < 4; ++r) phi[l + 3 * r] = r + 4 * l;
  expect_isomorphic_via(AB, BA, phi);
}

TEST(Product, CapEnforced) {
  Caps small;
  small.order = 8;
  EXPECT_THROW(product(zn(3), zn(3), small), CapExceeded);
}

TEST(ZeroPairing, Structure) {
  const auto R = zero_pairing(zn(2));
  EXPECT_EQ(R.order(), 16u);
  EXPECT_EQ(R.label(), "K2(Z2)");
  // Off-diagonal entries multiply to zero and form the radical.
  EXPECT_EQ(jacobson_radical(R).members.indices(), (std::vector<std::uint32_t>{0, 2, 4, 6}));
  EXPECT_THROW(zero_pairing(upper_triangular(zn(2), 2)), NotApplicable);
}

TEST(InvolutionFor, Antidiagonal) {
  const auto S = example6();
  EXPECT_EQ(S.involution().map(), (std::vector<std::uint32_t>{0, 4, 2, 6, 1, 5, 3, 7}));
  EXPECT_EQ(S.label(), "T2(Z2)|antidiagonal");
}

TEST(InvolutionFor, Swap) {
  const auto S = build_star({RingExpr::product(RingExpr::zn(2), RingExpr::zn(2)), InvExpr::swap()});
  EXPECT_EQ(S.involution().map(), (std::vector<std::uint32_t>{0, 2, 1, 3}));
}

TEST(InvolutionFor, NotApplicable) {
  const auto t2 = RingExpr::upper_triangular(RingExpr::zn(2), 2);
  EXPECT_THROW(build_star({t2, InvExpr::identity()}), NotApplicable);
  EXPECT_THROW(build_star({RingExpr::product(RingExpr::zn(2), RingExpr::zn(3)), InvExpr::swap()}),
               NotApplicable);
  EXPECT_THROW(build_star({RingExpr::zn(4), InvExpr::frobenius()}), NotApplicable);
  EXPECT_THROW(build_star({RingExpr::zn(4), InvExpr::transpose()}), NotApplicable);
  EXPECT_THROW(build_star({RingExpr::zn(4), InvExpr::antidiagonal()}), NotApplicable);
}

TEST(InvolutionFor, TablePassesThroughValidation) {
  EXPECT_NO_THROW(build_star({RingExpr::zn(3), InvExpr::table({0, 1, 2}, "id")}));
  EXPECT_THROW(build_star({RingExpr::zn(3), InvExpr::table({0, 2, 1})}), AxiomViolation);
}

TEST(Example6, Properties) {
  const auto S = example6();
  EXPECT_EQ(projections(S).indices(), (std::vector<std::uint32_t>{0, 5}));
  EXPECT_TRUE(is_star_abelian(S).holds);
}

TEST(DefaultCorpus, Contents) {
  const auto corpus = default_corpus();
  EXPECT_GE(corpus.size(), 14u);
  std::vector<std::string> labels;
  for (const auto& item : corpus) labels.push_back(item.star.label());
  auto has = [&](const std::string& l) { return std::find(labels.begin(), labels.end(), l) != labels.end(); };
  EXPECT_TRUE(has("T2(Z2)|antidiagonal"));
  EXPECT_TRUE(has("Z2xZ2|swap"));
  EXPECT_TRUE(has("Z4|identity"));
  EXPECT_TRUE(has("M2(Z3)|transpose"));
  std::size_t max_order = 0;
  for (const auto& item : corpus) max_order = std::max(max_order, item.star.ring().order());
  EXPECT_EQ(max_order, 81u);
}
