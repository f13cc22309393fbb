#include "test_support.hpp"

using namespace detseq;
using namespace detseq::testing;

TEST(Generate, NamedPrefixes) {
  EXPECT_EQ(generate(SequenceSpec::named(NamedSequence::Fibonacci), 7), ints({0, 1, 1, 2, 3, 5, 8}));
  EXPECT_EQ(generate(SequenceSpec::named(NamedSequence::Catalan), 6), ints({1, 1, 2, 5, 14, 42}));
  EXPECT_EQ(generate(SequenceSpec::named(NamedSequence::CentralBinomial), 5), ints({1, 2, 6, 20, 70}));
  EXPECT_EQ(generate(SequenceSpec::named(NamedSequence::CatalanShiftedSymplectic), 7),
            ints({0, 1, 1, 2, 5, 14, 42}));
  EXPECT_EQ(generate(SequenceSpec::named(NamedSequence::BinomialShiftedSymplectic), 6), ints({0, 1, 2, 6, 20, 70}));
}

TEST(Generate, LongCatalanMatchesBinomialFormula) {
  const auto c = generate(SequenceSpec::named(NamedSequence::Catalan), 45);
  for (long k = 0; k < 45; ++k) ASSERT_EQ(c[static_cast<std::size_t>(k)], Scalar(binomial(2 * k, k) / (k + 1)));
}

TEST(Generate, PeriodicGeometricExplicit) {
  EXPECT_EQ(generate(SequenceSpec::periodic(ints({1, 2, 3})), 5), ints({1, 2, 3, 1, 2}));
  EXPECT_EQ(generate(SequenceSpec::geometric(Scalar(3), Scalar(-2)), 4), ints({3, -6, 12, -24}));
  EXPECT_EQ(generate(SequenceSpec::constant(Scalar(7)), 3), ints({7, 7, 7}));
  EXPECT_EQ(generate(SequenceSpec::explicit_terms(ints({4, 5})), 2), ints({4, 5}));
  EXPECT_DETSEQ_ERROR(generate(SequenceSpec::explicit_terms(ints({4, 5})), 3), ErrorKind::InsufficientTerms);
}

TEST(Generate, LinearRecurrenceSatisfiesItself) {
  const auto coeffs = ints({2, -1, 3});
  const auto spec = SequenceSpec::linear_recurrence(coeffs, ints({1, 0, -2}));
  const auto w = generate(spec, 30);
  for (std::size_t n = 3; n < w.size(); ++n) {
    ASSERT_EQ(w[n], coeffs[0] * w[n - 1] + coeffs[1] * w[n - 2] + coeffs[2] * w[n - 3]);
  }
  // shared prefixes agree
  const auto shorter = generate(spec, 11);
  EXPECT_TRUE(std::equal(shorter.begin(), shorter.end(), w.begin()));
}

TEST(Generate, MalformedSpecs) {
  EXPECT_DETSEQ_ERROR(SequenceSpec::linear_recurrence(ints({1, 1}), ints({0})), ErrorKind::MalformedSpec);
  EXPECT_DETSEQ_ERROR(SequenceSpec::linear_recurrence({}, ints({0})), ErrorKind::MalformedSpec);
  EXPECT_DETSEQ_ERROR(SequenceSpec::periodic({}), ErrorKind::MalformedSpec);
  EXPECT_DETSEQ_ERROR(parse_named_sequence("lucas"), ErrorKind::MalformedSpec);
}

TEST(Transforms, AlternateSigns) {
  EXPECT_EQ(alternate_signs(ints({0, 1, 1, 2, 3})), ints({0, -1, 1, -2, 3}));
  EXPECT_EQ(alternate_signs(ints({0, 0, 0})), ints({0, 0, 0}));
  const auto x = ints({5, -3, 8, 1, 0, 9});
  EXPECT_EQ(alternate_signs(alternate_signs(x)), x);
}

TEST(Transforms, InterleaveEven) {
  EXPECT_EQ(interleave_even(ints({1, 1, -1})), ints({0, 1, 0, 1, 0, -1}));
  EXPECT_TRUE(interleave_even({}).empty());
  EXPECT_EQ(interleave_even(ints({4})), ints({0, 4}));
}

TEST(Transforms, DuplicateTerms) {
  EXPECT_EQ(duplicate_terms(ints({1, 2})), ints({0, 1, 1, 2}));
  EXPECT_TRUE(duplicate_terms({}).empty());
  EXPECT_EQ(duplicate_terms(ints({9})), ints({0, 9}));
  EXPECT_EQ(duplicate_terms(ints({1, 2, 3})).size(), 6u);
}

TEST(Transforms, LayeredSpecs) {
  const auto base = SequenceSpec::explicit_terms(ints({1, 1, -1}));
  EXPECT_EQ(generate(SequenceSpec::transformed(SequenceTransform::InterleaveEven, base), 6),
            ints({0, 1, 0, 1, 0, -1}));
  EXPECT_EQ(generate(SequenceSpec::transformed(SequenceTransform::InterleaveEven, base), 5), ints({0, 1, 0, 1, 0}));
  EXPECT_EQ(generate(SequenceSpec::transformed(SequenceTransform::DuplicateTerms, base), 6),
            ints({0, 1, 1, 1, 1, -1}));
  EXPECT_EQ(generate(negated(base), 3), ints({-1, -1, 1}));
  EXPECT_EQ(generate(alternated(SequenceSpec::named(NamedSequence::Fibonacci)), 5), ints({0, -1, 1, -2, 3}));
}
