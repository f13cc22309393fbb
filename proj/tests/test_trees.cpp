#include <set>

#include "test_support.hpp"

using namespace detseq;
using namespace detseq::testing;

namespace {

std::vector<Integer> zs(std::initializer_list<long> v) { return std::vector<Integer>(v.begin(), v.end()); }

}  // namespace

TEST(NextEvenBeta, Examples) {
  EXPECT_EQ(next_even_beta({}), 0);
  EXPECT_EQ(next_even_beta(zs({1, 1, 1, 1, 1})), 0);
  EXPECT_EQ(next_even_beta(zs({1, 1, -1, -7, 69})), 434748);
  EXPECT_DETSEQ_ERROR(next_even_beta(zs({2})), ErrorKind::InvariantViolated);
}

TEST(EnumerateEvenTree, SmallDepths) {
  const auto one = enumerate_even_tree(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].prefix.empty());
  EXPECT_EQ(one[0].next_center, 0);

  const auto plus = enumerate_even_tree(3, 1);
  const auto minus = enumerate_even_tree(3, -1);
  ASSERT_EQ(plus.size(), 2u);
  ASSERT_EQ(minus.size(), 2u);
  // Global sign change, compared as sets of prefixes since both listings take +1 first.
  std::set<std::vector<Integer>> negated, listed;
  for (const auto& path : plus) {
    std::vector<Integer> neg;
    for (const auto& v : path.prefix) neg.push_back(-v);
    negated.insert(neg);
  }
  for (const auto& path : minus) listed.insert(path.prefix);
  EXPECT_EQ(listed, negated);
  EXPECT_EQ(minus[0].next_center, -plus[1].next_center);
  EXPECT_DETSEQ_ERROR(enumerate_even_tree(0), ErrorKind::DomainError);
  EXPECT_DETSEQ_ERROR(enumerate_even_tree(2, 0), ErrorKind::DomainError);
}

TEST(EnumerateEvenTree, UnimodularAlongEveryPath) {
  for (const auto& path : enumerate_even_tree(5)) {
    for (std::size_t k = 1; k <= path.prefix.size(); ++k) {
      const std::vector<Integer> head(path.prefix.begin(), path.prefix.begin() + static_cast<std::ptrdiff_t>(k));
      ASSERT_EQ(even_symplectic_det(head), Scalar(1));
      ASSERT_EQ(path.centers[k - 1] % 2, 0);
    }
    EXPECT_EQ(path.next_center % 2, 0);
  }
}

TEST(EnumerateEvenTree, DivergenceAtCenter) {
  const auto rows = enumerate_even_tree(5);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      std::size_t m = 0;
      while (rows[a].prefix[m] == rows[b].prefix[m]) ++m;
      EXPECT_EQ(rows[a].centers[m], rows[b].centers[m]);
      EXPECT_EQ(rows[a].prefix[m] + rows[b].prefix[m], 2 * rows[a].centers[m]);
    }
  }
}

TEST(FormatEvenTree, Layout) {
  const auto text = format_even_tree(enumerate_even_tree(3));
  EXPECT_EQ(text, "0_{+1} 0_{+1} 0_{±}\n0_{+1} 0_{-1} 2_{±}\n");
}

TEST(Sympletric, ClosedFamilies) {
  const auto fib = SequenceSpec::named(NamedSequence::Fibonacci);
  const auto six = SequenceSpec::periodic(ints({0, 1, 1, 0, -1, -1}));
  const auto f = sympletric_dets(fib, 12);
  const auto s = sympletric_dets(six, 12);
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(f[n - 1], sympletric_target(n));
    EXPECT_EQ(s[n - 1], sympletric_target(n));
  }
}

TEST(SympletricExtensions, Examples) {
  EXPECT_EQ(sympletric_extensions(zs({0, 1, 1, 2, 3, 5, 8})), zs({13, 11}));
  EXPECT_EQ(sympletric_extensions(zs({0, 1, 1})), zs({2, 0}));
  EXPECT_EQ(sympletric_extensions(zs({0, 1, 1, 0, -1, -1, 0})), zs({3, 1}));
  EXPECT_DETSEQ_ERROR(sympletric_extensions(zs({0, 1, 1, 7})), ErrorKind::PatternViolated);
  EXPECT_DETSEQ_ERROR(sympletric_extensions(zs({0, 1, 2})), ErrorKind::PatternViolated);
}
