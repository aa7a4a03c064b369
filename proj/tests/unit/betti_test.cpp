#include <pbundle/betti.hpp>
#include <pbundle/errors.hpp>

#include <gtest/gtest.h>

namespace pbundle {
namespace {

BettiProfile ones(int len) { return BettiProfile{std::vector<Integer>(len, Integer(1))}; }

TEST(PoincareProfileTest, ResidualFamilyLooksLikeProjectiveSpace) {
  EXPECT_EQ(poincare_profile(9, 3, 3), ones(9));
  EXPECT_EQ(poincare_profile(6, 2, 3), ones(6));
}

TEST(PoincareProfileTest, HardLefschetzFailure) {
  const BettiProfile p = poincare_profile(6, 3, 3);
  EXPECT_EQ(p, (BettiProfile{{1, 1, 2, 1, 2, 1, 1}}));
  EXPECT_EQ(p.to_string(), "(1,1,2,1,2,1,1)");
  const CheckOutcome hl = check_hard_lefschetz(p);
  EXPECT_FALSE(hl.pass);
  ASSERT_TRUE(hl.failing_index.has_value());
  EXPECT_EQ(*hl.failing_index, 2);
}

TEST(PoincareProfileTest, QuadricSectionProfile) {
  EXPECT_EQ(poincare_profile(3, 2, 3), (BettiProfile{{1, 2, 2, 1}}));
  EXPECT_EQ(poincare_profile(4, 2, 2), ones(4));
  EXPECT_EQ(poincare_profile(6, 2, 2), (BettiProfile{{1, 1, 0, 1, 1}}));
}

TEST(PoincareProfileTest, TotalIsDegreeTimesRank) {
  for (int n = 1; n <= 12; ++n) {
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      for (int r = 1; r <= 10; ++r) {
        const BettiProfile p = poincare_profile(n, r, d);
        Integer total = 0;
        for (const auto& a : p.a) total += a;
        EXPECT_EQ(total, Integer(d) * r) << n << "," << r << "," << d;
        EXPECT_EQ(p.dimension(), n + r - n / d - 1);
      }
    }
  }
}

TEST(PoincareProfileTest, Errors) {
  EXPECT_THROW(poincare_profile(5, 2, 2), NotDivisible);
  EXPECT_THROW(poincare_profile(0, 2, 1), InvalidInput);
  EXPECT_THROW(poincare_profile(6, 2, 4), NotDivisible);
}

TEST(SupportTest, ExactSupport) {
  EXPECT_TRUE(check_support(ones(4), 3).pass);
  EXPECT_FALSE(check_support(ones(4), 4).pass);
  EXPECT_FALSE(check_support(BettiProfile{{1, 0, 1}}, 2).pass);
}

TEST(NOverDTest, Inequality) {
  EXPECT_TRUE(check_n_over_d_leq_r(6, 3, 2).pass);
  EXPECT_FALSE(check_n_over_d_leq_r(6, 2, 2).pass);
  EXPECT_FALSE(check_n_over_d_leq_r(5, 2, 4).pass);
}

TEST(HardLefschetzTest, MonotoneProfilesPass) {
  EXPECT_TRUE(check_hard_lefschetz(ones(7)).pass);
  EXPECT_TRUE(check_hard_lefschetz(BettiProfile{{1, 2, 3, 2, 1}}).pass);
  EXPECT_FALSE(check_hard_lefschetz(BettiProfile{{2, 1, 2}}).pass);
}

}  // namespace
}  // namespace pbundle
