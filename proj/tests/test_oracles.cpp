#include "test_support.hpp"

using namespace detseq;
using namespace detseq::testing;

namespace {

void expect_matches_engine(const OracleFamily& f, std::size_t n_max) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto c = builder_counterpart(f, n);
    ASSERT_EQ(oracle_det(f, n), engine_value(c)) << oracle_name(f) << " n=" << n;
  }
}

}  // namespace

TEST(OracleDet, Examples) {
  EXPECT_EQ(oracle_det(oracle::Thm11{1, 1}, 5), Scalar(6));
  EXPECT_EQ(oracle_det(oracle::Prop82Diagonal{1, 1, 1, 1, 2}, 3), Scalar(98));
  EXPECT_EQ(oracle_det(oracle::PowerDistance{2}, 4), Scalar(-27));
  EXPECT_EQ(oracle_det(oracle::Thm13{0, 0}, 2), S("-1/2"));
  EXPECT_EQ(oracle_det(oracle::Remark52A{3}, 4), Scalar(64));
  EXPECT_EQ(oracle_det(oracle::Prop51Ones{}, 7), Scalar(1));
  EXPECT_DETSEQ_ERROR(oracle_det(oracle::Thm11{1, 1}, 0), ErrorKind::DomainError);
  EXPECT_DETSEQ_ERROR(oracle_det(oracle::Thm11{-1, 1}, 2), ErrorKind::DomainError);
}

TEST(OracleDet, FactorialProductAgainstPascalBlocks) {
  // det((i+j+k)!) = prod i!(i+k)! is the t = s specialization scaled by factorials.
  for (long k = 0; k <= 4; ++k) {
    const auto r = verify_identity(identity::Thm11FactorialForm{k}, 1, 7);
    EXPECT_TRUE(r.holds) << k;
  }
}

TEST(OracleDet, BinomialFamiliesMatchEngine) {
  for (long s = 0; s <= 4; ++s) {
    for (long t = 0; t <= 4; ++t) {
      expect_matches_engine(oracle::Thm11{s, t}, 7);
      expect_matches_engine(oracle::Thm13{s, t}, 6);
    }
  }
  for (long k = 0; k <= 4; ++k) {
    expect_matches_engine(oracle::Remark52A{k}, 7);
    expect_matches_engine(oracle::Remark52B{k}, 7);
    expect_matches_engine(oracle::Thm53Sqrt{k}, 6);
  }
}

TEST(OracleDet, ParametricFamiliesMatchEngine) {
  std::mt19937 rng(5);
  const auto pick = [&] { return Scalar(random_int(rng, -4, 4), random_int(rng, 1, 3)); };
  for (int trial = 0; trial < 8; ++trial) {
    expect_matches_engine(oracle::Thm15{pick(), pick(), pick()}, 7);
    expect_matches_engine(oracle::KrattB{pick(), pick()}, 4);
    expect_matches_engine(oracle::Ex32Geometric{pick(), pick()}, 7);
    expect_matches_engine(oracle::Ex54SymplecticGeometric{pick(), pick()}, 4);
    expect_matches_engine(oracle::Prop82Diagonal{pick(), pick(), pick(), pick(), pick()}, 6);
    expect_matches_engine(oracle::PowerDistance{pick()}, 7);
    const auto gamma = SequenceSpec::explicit_terms({pick(), pick(), pick(), pick(), pick(), pick()});
    expect_matches_engine(oracle::DiagonalDegenerateU2{gamma, pick(), pick(), pick()}, 6);
    const auto alpha = SequenceSpec::explicit_terms({pick(), pick(), pick(), pick(), pick(), pick(), pick()});
    const auto beta = SequenceSpec::explicit_terms({pick(), pick(), pick(), pick(), pick(), pick(), pick()});
    expect_matches_engine(oracle::Prop14{alpha, beta}, 7);
  }
  expect_matches_engine(oracle::Prop51Ones{}, 6);
  expect_matches_engine(oracle::Prop51Naturals{}, 6);
}

TEST(OracleDet, CounterpartOrders) {
  EXPECT_EQ(builder_counterpart(oracle::KrattB{1, 1}, 3).order, 6u);
  EXPECT_EQ(builder_counterpart(oracle::Thm11{1, 1}, 3).order, 3u);
  const auto c = builder_counterpart(oracle::Thm53Sqrt{2}, 3);
  EXPECT_TRUE(c.square_root);
  EXPECT_EQ(c.order, 6u);
  EXPECT_EQ(family_name(c.spec), "T_k");
}

TEST(VerifyIdentity, Examples) {
  const auto p12 = verify_identity(identity::Prop12{{{0, 0, 3}}}, 1, 6);
  EXPECT_TRUE(p12.holds);
  EXPECT_EQ(p12.id, "prop12");
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(det(build(MatrixSpec{mat::PerturbedPascal{{{0, 0, 3}}}}, n)), Scalar(4));

  const auto p81 = verify_identity(
      identity::Prop81Scaling{SequenceSpec::periodic(ints({1, 2, 3})), 1, 1, 1, 1, Scalar(2), Scalar(3)}, 1, 4);
  EXPECT_TRUE(p81.holds);
  EXPECT_FALSE(p81.first_failure);

  EXPECT_DETSEQ_ERROR(verify_identity(identity::Ex55Ratio{}, 0, 3), ErrorKind::DomainError);
  EXPECT_DETSEQ_ERROR(verify_identity(identity::Ex55Ratio{}, 4, 3), ErrorKind::DomainError);
}

TEST(VerifyIdentity, RelationalFamilies) {
  EXPECT_TRUE(verify_identity(identity::Ex55Ratio{}, 1, 7).holds);
  EXPECT_TRUE(verify_identity(identity::Remark52Entries{}, 1, 8).holds);
  for (long k = 0; k <= 3; ++k) EXPECT_TRUE(verify_identity(identity::Gram{k}, 1, 6).holds) << k;
  EXPECT_TRUE(verify_identity(identity::Interleave51{SequenceSpec::explicit_terms(ints({1, 1, -1}))}, 1, 3).holds);
}

TEST(VerifyIdentity, InterleaveFailsFromOrderSix) {
  // Symbolically the order 6 values are b1^2 (b0 b1 + b0 b2 - b1^2)^2 and
  // (b0^3 - 2 b0 b1^2 - b0 b1 b2 + b1^3)^2; they agree for (1,1,-1) by accident.
  const auto r = verify_identity(identity::Interleave51{SequenceSpec::explicit_terms(ints({-2, 1, 3, 3}))}, 1, 4);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.first_failure);
  EXPECT_EQ(r.first_failure->n, 3u);
  EXPECT_EQ(r.first_failure->lhs, Scalar(81));
  EXPECT_EQ(r.first_failure->rhs, Scalar(9));
  const auto late = verify_identity(identity::Interleave51{SequenceSpec::explicit_terms(ints({1, 1, -1, 2, 0}))}, 1, 5);
  ASSERT_TRUE(late.first_failure);
  EXPECT_EQ(late.first_failure->n, 4u);
  EXPECT_EQ(late.first_failure->lhs, Scalar(100));
  EXPECT_EQ(late.first_failure->rhs, Scalar(484));
}

TEST(VerifyIdentity, EntryAndScalingIdentitiesOnRandomData) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Scalar> a, b;
    for (int i = 0; i < 7; ++i) {
      a.emplace_back(random_int(rng, -6, 6));
      b.emplace_back(random_int(rng, -6, 6));
    }
    b[0] = a[0];
    const auto alpha = SequenceSpec::explicit_terms(a);
    const auto beta = SequenceSpec::explicit_terms(b);
    EXPECT_TRUE(verify_identity(identity::PijClosedForm{alpha, beta}, 1, 7).holds);
    EXPECT_TRUE(verify_identity(identity::Prop14Entries{alpha, beta}, 1, 7).holds);

    std::vector<mat::GridCoefficient> grid;
    for (long s = 0; s <= 2; ++s) {
      for (long t = 0; t <= 1; ++t) grid.push_back({s, t, Scalar(random_int(rng, -3, 3))});
    }
    EXPECT_TRUE(verify_identity(identity::Prop12{grid}, 1, 6).holds);

    const auto gamma = SequenceSpec::explicit_terms(a);
    const identity::Prop81Scaling scaling{gamma,
                                          random_int(rng, -3, 3),
                                          random_int(rng, -3, 3),
                                          random_int(rng, -3, 3),
                                          random_int(rng, -3, 3),
                                          Scalar(random_int(rng, 1, 4), random_int(rng, 1, 3)),
                                          Scalar(-random_int(rng, 1, 4), random_int(rng, 1, 3))};
    EXPECT_TRUE(verify_identity(scaling, 1, 6).holds);
  }
}

TEST(VerifyIdentity, StabilizesOneStepAfterMinDegree) {
  // c_{1,1} alone: degree (1,1), value 1 at n = 1 and 1 + c at n >= 2.
  const std::vector<mat::GridCoefficient> grid{{1, 1, 5}};
  EXPECT_EQ(det(build(MatrixSpec{mat::PerturbedPascal{grid}}, 1)), Scalar(1));
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(det(build(MatrixSpec{mat::PerturbedPascal{grid}}, n)), Scalar(6));
  EXPECT_TRUE(verify_identity(identity::Prop12{grid}, 1, 6).holds);
}
