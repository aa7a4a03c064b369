#include <pbundle/errors.hpp>
#include <pbundle/registry.hpp>

#include <gtest/gtest.h>

#include <set>

#include "oracles/convert.hpp"
#include "oracles/oracles.hpp"

namespace pbundle {
namespace {

TEST(BundleExprTest, Ranks) {
  EXPECT_EQ(BundleExpr::trivial(3).rank(5), 3);
  EXPECT_EQ(BundleExpr::tangent_twist().rank(4), 4);
  EXPECT_EQ(BundleExpr::omega_two().rank(4), 4);
  EXPECT_EQ(BundleExpr::wedge2_tangent_twist().rank(4), 6);
  EXPECT_EQ(BundleExpr::p_of_line(2).rank(3), 9);
  EXPECT_EQ(BundleExpr::quotient_by_trivial(BundleExpr::wedge2_tangent_twist(), 3).rank(4), 3);
  EXPECT_THROW(BundleExpr::quotient_by_trivial(BundleExpr::tangent_twist(), 3).rank(3), RankUnderflow);
}

TEST(BundleExprTest, TangentTwistIsPrincipalPartsOfHyperplane) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(chern_of(BundleExpr::p_of_line(1), n), chern_of(BundleExpr::tangent_twist(), n)) << n;
}

TEST(BundleExprTest, TangentTwistHasAllClassesOne) {
  const ChernData c = chern_of(BundleExpr::tangent_twist(), 5);
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(c[i], 1);
}

TEST(BundleExprTest, QuotientByTrivialKeepsClasses) {
  const BundleExpr w = BundleExpr::wedge2_tangent_twist();
  const ChernData full = chern_of(w, 4);
  for (int k = 0; k <= 3; ++k) {
    const ChernData q = chern_of(BundleExpr::quotient_by_trivial(w, k), 4);
    EXPECT_EQ(q.c(), full.c());
    EXPECT_EQ(q.rank(), 6 - k);
  }
}

TEST(BundleExprTest, DirectSumMultipliesTotalClasses) {
  const ChernData c = chern_of(BundleExpr::direct_sum({BundleExpr::line(2), BundleExpr::line(3)}), 2);
  EXPECT_EQ(c[1], 5);
  EXPECT_EQ(c[2], 6);
  EXPECT_EQ(c.rank(), 2);
}

TEST(WedgeTest, AgreesWithSplittingOracle) {
  const std::vector<std::vector<long long>> root_sets = {{1, 2}, {0, 1, 3}, {1, 1, 1, 1}, {-1, 2, 0, 5}, {2, -3, 1, 1, 4}};
  for (const auto& roots : root_sets) {
    const int n = 6;
    const ChernData c(n, static_cast<int>(roots.size()), oracle::big(oracle::chern_of_roots(roots, n)));
    const ChernData w = wedge2_chern(c, static_cast<int>(roots.size()));
    const auto expected = oracle::wedge2_of_roots(roots, n);
    for (int i = 0; i <= n; ++i) EXPECT_EQ(w[i], oracle::big(expected[i])) << "i=" << i;
  }
}

TEST(WedgeTest, WedgeOfTangentTwistOnP4) {
  // (1 - 2H) / (1 - H)^5 truncated at H^4.
  const ChernData w = chern_of(BundleExpr::wedge2_tangent_twist(), 4);
  EXPECT_EQ(w.c(), (std::vector<Integer>{1, 3, 5, 5, 0}));
}

TEST(CatalogTest, KeysAreUnique) {
  std::set<std::string> keys;
  for (const auto& rec : catalog(6)) EXPECT_TRUE(keys.insert(rec.key).second) << rec.key;
  EXPECT_THROW(catalog(3), InvalidInput);
}

TEST(CatalogTest, ParamsMatchTheBundle) {
  for (const auto& rec : catalog(6)) {
    EXPECT_EQ(rec.params.chern, chern_of(rec.bundle, rec.params.n)) << rec.key;
    EXPECT_EQ(rec.params.r + 1, rec.bundle.rank(rec.params.n)) << rec.key;
    EXPECT_NO_THROW(rec.params.validate()) << rec.key;
  }
}

TEST(CatalogTest, TangoBundleNote) {
  const auto hits = verify_example(2, 3);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].first.params.r + 1, 3);
  EXPECT_TRUE(hits[0].second.all_pass());
}

TEST(CatalogTest, VerifyFiltersAndRejectsUnknown) {
  EXPECT_EQ(verify_example(1).size(), 3u);
  EXPECT_EQ(verify_example(2).size(), 4u);
  EXPECT_EQ(verify_example(3).size(), 1u);
  EXPECT_EQ(verify_example(5, std::nullopt, 4).size(), 2u);
  EXPECT_THROW(verify_example(9), InvalidInput);
  EXPECT_THROW(verify_example(1, 7), InvalidInput);
}

TEST(CatalogTest, CatalanNumbers) {
  const std::vector<long> expected{1, 1, 2, 5, 14, 42, 132};
  for (long k = 0; k < 7; ++k) EXPECT_EQ(catalan(k), expected[k]);
}

}  // namespace
}  // namespace pbundle
