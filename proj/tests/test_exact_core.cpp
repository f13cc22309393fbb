#include "test_support.hpp"

using namespace detseq;
using namespace detseq::testing;

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(S("6/4").to_string(), "3/2");
  EXPECT_EQ(S("-6/4").to_string(), "-3/2");
  EXPECT_EQ(S("8/4").to_string(), "2");
  EXPECT_EQ(S("+7").to_string(), "7");
  EXPECT_EQ(Scalar(Integer(3), Integer(-6)).to_string(), "-1/2");
  EXPECT_TRUE(S("10/5").is_integer());
  EXPECT_FALSE(S("1/3").is_integer());
}

TEST(Scalar, Arithmetic) {
  EXPECT_EQ(S("1/2") + S("1/3"), S("5/6"));
  EXPECT_EQ(S("1/2") - S("1/3"), S("1/6"));
  EXPECT_EQ(S("2/3") * S("9/4"), S("3/2"));
  EXPECT_EQ(S("2/3") / S("4/9"), S("3/2"));
  EXPECT_LT(S("-1/2"), S("1/3"));
  EXPECT_EQ(pow(S("2/3"), -2), S("9/4"));
  EXPECT_EQ(pow(S("-2"), 3), Scalar(-8));
}

TEST(Scalar, Errors) {
  EXPECT_DETSEQ_ERROR(S("1") / Scalar(0), ErrorKind::DivisionByZero);
  EXPECT_DETSEQ_ERROR(Scalar(Integer(1), Integer(0)), ErrorKind::DivisionByZero);
  EXPECT_DETSEQ_ERROR(pow(Scalar(0), -1), ErrorKind::DivisionByZero);
  EXPECT_DETSEQ_ERROR(S("1/2").to_integer(), ErrorKind::NotAnInteger);
  EXPECT_DETSEQ_ERROR(S("1/-2"), ErrorKind::ParseError);
  EXPECT_DETSEQ_ERROR(S("abc"), ErrorKind::ParseError);
  EXPECT_DETSEQ_ERROR(S(""), ErrorKind::ParseError);
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(-1, -1, BinomialConvention::Extended), 1);
  EXPECT_EQ(binomial(-1, 0, BinomialConvention::Extended), 1);
  EXPECT_EQ(binomial(3, -1, BinomialConvention::Extended), 0);
  EXPECT_EQ(binomial(-1, -1), 0);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(-3, 2), 6);  // (-3)(-4)/2
}

TEST(Binomial, ExtendedRejectsUndefined) {
  EXPECT_DETSEQ_ERROR(binomial(-2, -3, BinomialConvention::Extended), ErrorKind::UndefinedBinomial);
}

TEST(Binomial, FactorialFormula) {
  for (long n = 0; n <= 40; ++n) {
    for (long k = 0; k <= n; ++k) {
      const Integer expected = factorial(n) / (factorial(k) * factorial(n - k));
      ASSERT_EQ(binomial(n, k), expected) << n << "," << k;
      ASSERT_EQ(binomial(n, k, BinomialConvention::Extended), expected);
    }
  }
}

TEST(Binomial, ExtendedAgreesWhereStandardNonzero) {
  for (long n = -1; n <= 12; ++n) {
    for (long k = -8; k <= 14; ++k) {
      const Integer standard = binomial(n, k);
      if (standard != 0) {
        ASSERT_EQ(binomial(n, k, BinomialConvention::Extended), standard) << n << "," << k;
      }
    }
  }
  for (long n = -8; n <= 12; ++n) {
    for (long k = -1; k <= 14; ++k) {
      const Integer standard = binomial(n, k);
      if (standard != 0) {
        ASSERT_EQ(binomial(n, k, BinomialConvention::Extended), standard) << n << "," << k;
      }
    }
  }
}

TEST(IntegerSqrt, Examples) {
  EXPECT_EQ(integer_sqrt_exact(Integer(4)), 2);
  EXPECT_EQ(integer_sqrt_exact(Integer(81796)), 286);
  EXPECT_EQ(integer_sqrt_exact(Scalar(0)), 0);
  EXPECT_DETSEQ_ERROR(integer_sqrt_exact(Integer(2)), ErrorKind::NotAPerfectSquare);
  EXPECT_DETSEQ_ERROR(integer_sqrt_exact(Integer(-4)), ErrorKind::NegativeInput);
  EXPECT_DETSEQ_ERROR(integer_sqrt_exact(S("1/4")), ErrorKind::NotAnInteger);
}

TEST(IntegerSqrt, RandomSquaresUpTo1e50) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20261015);
  const Integer bound = pow(Integer(10), 50);
  for (int trial = 0; trial < 500; ++trial) {
    const Integer r = rng.get_z_range(bound);
    ASSERT_EQ(integer_sqrt_exact(Integer(r * r)), r);
    if (r > 0) EXPECT_DETSEQ_ERROR(integer_sqrt_exact(Integer(r * r + 1)), ErrorKind::NotAPerfectSquare);
  }
}

TEST(UniPolynomial, TrimAndEvaluate) {
  const UniPolynomial p(ints({1, -3, 2, 0, 0}));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Scalar(1)), Scalar(0));
  EXPECT_EQ(p(S("1/2")), Scalar(0));
  EXPECT_EQ(p(Scalar(3)), Scalar(10));
  EXPECT_EQ(UniPolynomial(ints({0, 0})).degree(), -1);
  EXPECT_EQ(p.to_string(), "2z^2 - 3z + 1");
}

TEST(UniPolynomial, Division) {
  const UniPolynomial a(ints({-1, 1}));   // z - 1
  const UniPolynomial b(ints({-2, 1}));   // z - 2
  const UniPolynomial c(ints({3, 0, 1})); // z^2 + 3
  const auto product = a * b * c;
  EXPECT_TRUE(divides(a * c, product));
  EXPECT_FALSE(divides(UniPolynomial(ints({-3, 1})), product));
  const auto [q, r] = divmod(product + UniPolynomial(ints({5})), a * b);
  EXPECT_EQ(q, c);
  EXPECT_EQ(r, UniPolynomial(ints({5})));
  EXPECT_DETSEQ_ERROR(divmod(a, UniPolynomial{}), ErrorKind::DivisionByZero);
}
