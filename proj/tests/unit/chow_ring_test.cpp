#include <pbundle/chow_ring.hpp>
#include <pbundle/errors.hpp>

#include <gtest/gtest.h>

#include "oracles/convert.hpp"
#include "oracles/oracles.hpp"

namespace pbundle {
namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

TEST(BasisChangeTest, ClassesInHU) {
  const BasisChange bc(2, 1, 3);
  EXPECT_EQ(bc.e_ratio(), 2);
  EXPECT_EQ(bc.h2(), (LinearClass{-1, 2}));
  EXPECT_EQ(bc.exceptional(), (LinearClass{-2, 3}));
  EXPECT_EQ(to_string(bc.exceptional()), "(-2)H1 + (3)U");
}

TEST(BasisChangeTest, InverseRelations) {
  const BasisChange bc(2, 1, 3);
  // H1 = d H2 - a E and U = ((1+bd)/a) H2 - b E.
  EXPECT_EQ(divisor_in_HU(3, -2, bc), (LinearClass{1, 0}));
  EXPECT_EQ(divisor_in_HU(2, -1, bc), (LinearClass{0, 1}));
  EXPECT_EQ(bc.to_h2e({1, 0}), std::make_pair(Integer(3), Integer(-2)));
  EXPECT_EQ(bc.to_h2e({0, 1}), std::make_pair(Integer(2), Integer(-1)));
}

TEST(BasisChangeTest, RejectsBadPairing) {
  EXPECT_THROW(BasisChange(0, 0, 1), InvalidInput);
  EXPECT_THROW(BasisChange(2, 2, 1), InvalidInput);
  EXPECT_THROW(BasisChange(2, 1, 2), InvalidInput);
}

TEST(ChowRingTest, GrothendieckRelation) {
  const ChowRing ring(ChernData(3, 3, ints({1, 5, 15, 39})));
  const ChowClass u3 = ring.normal_form(RawClass::monomial(0, 3));
  EXPECT_EQ(u3.coefficient(1, 2), 5);
  EXPECT_EQ(u3.coefficient(2, 1), -15);
  EXPECT_EQ(u3.coefficient(3, 0), 39);
  EXPECT_EQ(u3.coefficient(0, 2), 0);
}

TEST(ChowRingTest, TopDegreeNumbersAreSignedSegreClasses) {
  const ChowRing ring(ChernData(3, 3, ints({1, 5, 15, 39})));
  const std::vector<long> expected = {1, 5, 10, 14};
  for (int i = 0; i <= 3; ++i) {
    EXPECT_EQ(ring.intersection_number(ring.normal_form(RawClass::monomial(3 - i, 2 + i))), expected[i]) << i;
  }
}

TEST(ChowRingTest, SubcaseSixGoldenNumbers) {
  const ChernData chern(3, 3, ints({1, 5, 15, 39}));
  const BasisChange bc(2, 1, 3);
  const std::vector<Factor> eh4 = {{bc.exceptional(), 1}, {bc.h2(), 4}};
  const std::vector<Factor> h5 = {{bc.h2(), 5}};
  EXPECT_EQ(power_intersection(eh4, chern), 0);
  EXPECT_EQ(power_intersection(h5, chern), 8);

  const RawClass raw_eh4 = RawClass::linear(bc.exceptional()).times(RawClass::power(bc.h2(), 4, 3), 3);
  const auto form = segre_linear_form(raw_eh4, 3, 2);
  EXPECT_EQ(form[0] + form[1] * -5, 608);
  EXPECT_EQ(form[2], -128);
  EXPECT_EQ(form[3], -48);
  const auto form5 = segre_linear_form(RawClass::power(bc.h2(), 5, 3), 3, 2);
  EXPECT_EQ(form5[0] + form5[1] * -5, 360);
  EXPECT_EQ(form5[2], -80);
  EXPECT_EQ(form5[3], -32);

  const SegreData s(3, ints({1, -5, 10, -14}));
  EXPECT_EQ(segre_pairing(raw_eh4, s, 2), 0);
  EXPECT_EQ(segre_pairing(RawClass::power(bc.h2(), 5, 3), s, 2), 8);
}

TEST(ChowRingTest, DegreeMismatchIsReported) {
  const ChernData chern(2, 2, ints({1, 1, 1}));
  const ChowRing ring(chern);
  EXPECT_THROW(ring.intersection_number(ring.normal_form(RawClass::monomial(1, 1))), DegreeMismatch);
  const std::vector<Factor> f = {{{1, 0}, 2}};
  EXPECT_THROW(power_intersection(f, chern), DegreeMismatch);
  EXPECT_THROW(segre_pairing(RawClass::monomial(0, 1), SegreData(2, ints({1, -1, 0})), 1), DegreeMismatch);
}

TEST(ChowRingTest, MultiplicationIsAssociative) {
  const ChowRing ring(ChernData(2, 3, ints({1, 2, -3})));
  const ChowClass x = ring.power({1, 1}, 1);
  const ChowClass y = ring.power({-2, 1}, 2);
  const ChowClass z = ring.power({0, 3}, 1);
  EXPECT_EQ(ring.multiply(ring.multiply(x, y), z), ring.multiply(x, ring.multiply(y, z)));
}

TEST(ChowRingTest, SplitBundleMatchesProductSpace) {
  // O(1)^{r+1}: P(E) = P^n x P^r with U = H1 + H'.
  for (int n = 1; n <= 5; ++n) {
    for (int r = 1; r <= 4; ++r) {
      std::vector<Integer> c(n + 1);
      for (int i = 0; i <= n; ++i) c[i] = binomial(r + 1, i);
      const ChowRing ring(ChernData(n, r + 1, c));
      for (int i = 0; i <= n; ++i) {
        EXPECT_EQ(ring.intersection_number(ring.normal_form(RawClass::monomial(n - i, r + i))), oracle::big(oracle::split_product_number(n, r, i)));
      }
    }
  }
}

}  // namespace
}  // namespace pbundle
