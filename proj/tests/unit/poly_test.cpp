#include <pbundle/errors.hpp>
#include <pbundle/poly.hpp>

#include <gtest/gtest.h>

namespace pbundle {
namespace {

TEST(IntPolynomialTest, TrimsTrailingZeros) {
  const IntPolynomial p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p, (IntPolynomial{1, 2}));
  EXPECT_TRUE(IntPolynomial{}.is_zero());
  EXPECT_EQ(IntPolynomial({0, 0}).degree(), -1);
}

TEST(IntPolynomialTest, CoefficientBeyondDegreeIsZero) {
  const IntPolynomial p{3, -1};
  EXPECT_EQ(p.coeff(0), 3);
  EXPECT_EQ(p.coeff(7), 0);
}

TEST(IntPolynomialTest, ArithmeticAndToString) {
  const IntPolynomial p{1, 1};
  EXPECT_EQ(poly_pow(p, 3), (IntPolynomial{1, 3, 3, 1}));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(Integer(2) * p, (IntPolynomial{2, 2}));
  EXPECT_EQ((IntPolynomial{1, -3, 0, 2}).to_string(), "1 - 3t + 2t^3");
  EXPECT_EQ(IntPolynomial{}.to_string(), "0");
}

TEST(IntPolynomialTest, TruncatedProduct) {
  const IntPolynomial p{1, 1, 1};
  EXPECT_EQ(mul_truncated(p, p, 2), (IntPolynomial{1, 2, 3}));
  EXPECT_EQ((p * p).truncated(2), mul_truncated(p, p, 2));
}

TEST(SeriesInverseTest, GeometricSeries) {
  EXPECT_EQ(series_inverse(IntPolynomial{1, -1}, 4), (IntPolynomial{1, 1, 1, 1, 1}));
  EXPECT_EQ(series_inverse(IntPolynomial{-1}, 3), (IntPolynomial{-1}));
}

TEST(SeriesInverseTest, RejectsNonUnit) { EXPECT_THROW(series_inverse(IntPolynomial{2, 1}, 3), NonUnitConstantTerm); }

TEST(DivisionTest, ExactAndInexact) {
  const IntPolynomial num = poly_mul(IntPolynomial{-1, 0, 0, 1}, IntPolynomial{-1, 0, 1});
  const IntPolynomial den = poly_mul(IntPolynomial{-1, 1}, IntPolynomial{-1, 1});
  EXPECT_EQ(exact_divide(num, den), (IntPolynomial{1, 2, 2, 1}));
  const DivisionResult r = divide(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1});
  EXPECT_EQ(r.quotient, (IntPolynomial{-1, 1}));
  EXPECT_EQ(r.remainder, (IntPolynomial{2}));
  try {
    exact_divide(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1});
    FAIL() << "expected InexactDivision";
  } catch (const InexactDivision& e) {
    EXPECT_EQ(std::string(e.remainder()), "2");
  }
  EXPECT_THROW(divide(IntPolynomial{1}, IntPolynomial{}), InvalidInput);
  EXPECT_THROW(divide(IntPolynomial{1, 0, 1}, IntPolynomial{1, 2}), InexactDivision);
}

TEST(EvaluateTest, Horner) {
  EXPECT_EQ(evaluate(IntPolynomial{1, -1, 1, -1, 1, -1, 1, -1, -2}, Integer(-1)), 6);
  EXPECT_EQ(evaluate(IntPolynomial{}, Integer(5)), 0);
}

TEST(BinomialTest, Values) {
  EXPECT_EQ(binomial(4, 3), 4);
  EXPECT_EQ(binomial(5, 3), 10);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256"));
  EXPECT_THROW(binomial(-1, 0), InvalidInput);
}

TEST(ResiduePolynomialTest, CanonicalResidues) {
  const ResiduePolynomial p(9, {-2, 10, 9});
  EXPECT_EQ(p.coeffs(), (std::vector<Integer>{7, 1}));
  EXPECT_EQ(p.lift(), (IntPolynomial{7, 1}));
  EXPECT_THROW(ResiduePolynomial(1, {1}), InvalidInput);
}

TEST(ResiduePolynomialTest, FrobeniusModThree) {
  EXPECT_EQ(residue_reduce(poly_pow(IntPolynomial{1, 1}, 9), 3), ResiduePolynomial(3, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(ResiduePolynomialTest, InverseAndEvaluate) {
  const ResiduePolynomial c(9, {1, 7, 3});
  const ResiduePolynomial s = series_inverse(c, 6);
  EXPECT_EQ((c * s).truncated(6), ResiduePolynomial(9, {1}));
  EXPECT_THROW(series_inverse(ResiduePolynomial(9, {3, 1}), 4), NonUnitConstantTerm);
  EXPECT_EQ(evaluate(ResiduePolynomial(9, {1, 8, 1, 8, 1, 8, 1, 8, 7}), Integer(-1)), 6);
  EXPECT_THROW(ResiduePolynomial(9, {1}) + ResiduePolynomial(3, {1}), InvalidInput);
}

}  // namespace
}  // namespace pbundle
