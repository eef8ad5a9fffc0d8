#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "ringlab/search.hpp"

using namespace ringlab;

namespace {

bool contains_map(const std::vector<StarRing>& all, const std::vector<std::uint32_t>& map) {
  return std::any_of(all.begin(), all.end(), [&](const StarRing& S) { return S.involution().map() == map; });
}

std::vector<std::string> labels(const std::vector<AtlasRecord>& records) {
  std::vector<std::string> out;
  for (const auto& r : records) out.push_back(r.ring_label + "|" + r.involution_label);
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

std::string dump(const std::vector<AtlasRecord>& records) {
  std::ostringstream out;
  persist_atlas(records, out);
  return out.str();
}

}  // namespace

// =============================================================================
// enumerate_involutions
// =============================================================================

TEST(EnumerateInvolutions, Z4IsIdentityOnly) {
  const auto all = enumerate_involutions(zn(4));
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].involution().label(), "identity");
  EXPECT_EQ(all[0].involution().map(), (std::vector<std::uint32_t>{0, 1, 2, 3}));
}

TEST(EnumerateInvolutions, Z2xZ2IsIdentityAndSwap) {
  const auto all = enumerate_involutions(product(zn(2), zn(2)));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_TRUE(contains_map(all, {0, 1, 2, 3}));
  EXPECT_TRUE(contains_map(all, {0, 2, 1, 3}));
}

TEST(EnumerateInvolutions, T2ContainsAntidiagonal) {
  const auto t2 = upper_triangular(zn(2), 2);
  const auto all = enumerate_involutions(t2);
  EXPECT_TRUE(contains_map(all, example6().involution().map()));
  for (const auto& S : all) EXPECT_NE(S.involution().label(), "identity");
}

TEST(EnumerateInvolutions, IdentityIffCommutative) {
  for (const auto& R : {zn(6), gf4(), product(zn(2), zn(3)), upper_triangular(zn(2), 2), matrix_ring(zn(2), 2),
                        zero_pairing(zn(2))}) {
    const auto all = enumerate_involutions(R);
    ASSERT_FALSE(all.empty()) << R.label();
    std::vector<std::uint32_t> id(R.order());
    for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
    EXPECT_EQ(contains_map(all, id), is_commutative(R).holds) << R.label();
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        EXPECT_NE(all[i].involution().map(), all[j].involution().map()) << R.label();
  }
}

TEST(EnumerateInvolutions, MatchesBruteForceOnSmallRings) {
  // Every permutation of a ring of order <= 6, filtered by validate_involution.
  for (const auto& R : {zn(4), product(zn(2), zn(2)), zn(6), gf4()}) {
    std::vector<std::uint32_t> perm(R.order());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<std::vector<std::uint32_t>> expected;
    do {
      try {
        validate_involution(R, perm);
        expected.push_back(perm);
      } catch (const AxiomViolation&) {
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto all = enumerate_involutions(R);
    ASSERT_EQ(all.size(), expected.size()) << R.label();
    for (const auto& m : expected) EXPECT_TRUE(contains_map(all, m)) << R.label();
  }
}

TEST(EnumerateInvolutions, CapEnforced) {
  EXPECT_THROW(enumerate_involutions(upper_triangular(zn(3), 2)), CapExceeded);
}

// =============================================================================
// profiles
// =============================================================================

TEST(Profile, ParseAndPrint) {
  const auto p = Profile::parse("star_abelian, strongly_pi_regular,!strongly_pi_star_regular");
  ASSERT_EQ(p.literals().size(), 3u);
  EXPECT_FALSE(p.literals()[2].positive);
  EXPECT_EQ(p.to_string(), "star_abelian,strongly_pi_regular,!strongly_pi_star_regular");
  EXPECT_EQ(Profile::parse("noncommutative").to_string(), "!commutative");
  EXPECT_THROW(Profile::parse("star_abelain"), SpecParseError);
  EXPECT_TRUE(Profile::parse("").literals().empty());
}

TEST(ProfileSearch, Example6Profile) {
  SearchTask task;
  task.profile = Profile::parse("star_abelian,strongly_pi_regular,!strongly_pi_star_regular");
  const auto found = labels(run_profile_search(task));
  EXPECT_TRUE(has(found, "T2(Z2)|antidiagonal"));
}

TEST(ProfileSearch, AbelianWithNonProjectionIdempotent) {
  SearchTask task;
  task.profile = Profile::parse("abelian,!idempotents_are_projections");
  const auto found = labels(run_profile_search(task));
  EXPECT_TRUE(has(found, "Z2xZ2|swap"));
}

TEST(ProfileSearch, NoncommutativeStronglyPiStarRegularIsEmpty) {
  SearchTask task;
  task.profile = Profile::parse("strongly_pi_star_regular,noncommutative");
  EXPECT_TRUE(run_profile_search(task).empty());
}

TEST(ProfileSearch, AllInvolutionsAndSweep) {
  SearchTask task;
  task.source = SearchTask::Source::Specs;
  task.specs = {StarSpec{RingExpr::product(RingExpr::zn(2), RingExpr::zn(2)), InvExpr::identity()}};
  task.all_involutions = true;
  EXPECT_EQ(run_profile_search(task).size(), 2u);

  SearchTask sweep;
  sweep.source = SearchTask::Source::Sweep;
  sweep.sweep_max_order = 8;
  sweep.profile = Profile::parse("!idempotents_are_projections");
  const auto found = labels(run_profile_search(sweep));
  EXPECT_TRUE(has(found, "Z2xZ2|swap"));
  EXPECT_TRUE(has(found, "T2(Z2)|antidiagonal"));
}

TEST(ProfileSearch, Deterministic) {
  SearchTask task;
  task.timestamp = "2026-01-01T00:00:00Z";
  EXPECT_EQ(dump(run_profile_search(task)), dump(run_profile_search(task)));
}

// =============================================================================
// problem 10 scan
// =============================================================================

TEST(Problem10, SmallBases) {
  const auto records = problem10_scan(
      {StarSpec{RingExpr::zn(2), InvExpr::identity()}, StarSpec{RingExpr::zn(3), InvExpr::identity()}}, 2);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].ring_label, "M2(Z2)");
  EXPECT_EQ(records[1].ring_label, "M2(Z3)");
  for (const auto& r : records)
    EXPECT_FALSE(r.report["properties"]["strongly_pi_star_regular"]["holds"].get<bool>());
}

TEST(Problem10, KOneMatchesBase) {
  for (const auto& base : default_corpus_specs()) {
    const auto S = build_star(base);
    if (!is_commutative(S.ring()).holds) continue;
    const auto records = problem10_scan({base}, 1);
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].report["properties"]["strongly_pi_star_regular"]["holds"].get<bool>(),
              is_strongly_pi_star_regular(S))
        << S.label();
  }
}

TEST(Problem10, RejectsNoncommutativeBase) {
  EXPECT_THROW(problem10_scan({example6_spec()}, 2), NotApplicable);
}

// =============================================================================
// atlas persistence and replay
// =============================================================================

TEST(Atlas, RoundTrip) {
  SearchTask task;
  task.timestamp = "stamp";
  const auto records = run_profile_search(task);
  ASSERT_EQ(records.size(), default_corpus_specs().size());
  const auto text = dump(records);
  std::istringstream in(text);
  const auto loaded = load_atlas(in, 1.0);
  EXPECT_EQ(dump(loaded), text);
}

TEST(Atlas, EmptyFile) {
  std::istringstream in("");
  EXPECT_TRUE(load_atlas(in).empty());
}

TEST(Atlas, TamperedBooleanIsRejected) {
  auto rec = make_record(example6_spec(), example6(), "");
  rec.report["properties"]["star_abelian"]["holds"] = false;
  std::istringstream in(dump({rec}));
  EXPECT_THROW(load_atlas(in, 1.0), ReplayMismatch);
}

TEST(Atlas, TamperedWitnessIsRejected) {
  const StarSpec spec{RingExpr::zn(4), InvExpr::identity()};
  auto rec = make_record(spec, build_star(spec), "");
  rec.report["properties"]["pi_regular"]["witnesses"][2][2] = 1;
  std::istringstream in(dump({rec}));
  EXPECT_THROW(load_atlas(in, 1.0), ReplayMismatch);
}

TEST(Atlas, TamperedLabelIsRejected) {
  auto rec = make_record(example6_spec(), example6(), "");
  rec.ring_label = "T2(Z3)";
  EXPECT_THROW(replay_record(rec), ReplayMismatch);
}

TEST(Atlas, ZeroSampleSkipsReplay) {
  auto rec = make_record(example6_spec(), example6(), "");
  rec.report["properties"]["star_abelian"]["holds"] = false;
  std::istringstream in(dump({rec}));
  EXPECT_EQ(load_atlas(in, 0.0).size(), 1u);
}

TEST(Atlas, MalformedLine) {
  std::istringstream in("{not json}\n");
  EXPECT_THROW(load_atlas(in), SpecParseError);
  EXPECT_THROW(load_atlas(std::string("/nonexistent/atlas.jsonl")), IoFailure);
}
