#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace domroots;

TEST(Sturm, PseudoDivisionIdentity) {
  const IntPoly a{3, -2, 0, 5, 7};
  const IntPoly b{1, 0, -3};
  const auto [q, r] = pseudo_divide(a, b);
  EXPECT_LT(r.degree(), b.degree());
  // s * a = q * b + r with s a power of |lead(b)|
  bool found = false;
  for (BigInt s = 1; s <= 27; s *= 3) found = found || a * s == q * b + r;
  EXPECT_TRUE(found);
}

TEST(Sturm, SquarefreePart) {
  const IntPoly p = IntPoly{2, 1}.pow(3) * IntPoly{-1, 1};
  EXPECT_EQ(squarefree_part(p), (IntPoly{-2, 1, 1}));
}

TEST(Sturm, KnownCounts) {
  // x^2 - 2 has two real roots, one in (1, 2].
  const IntPoly q{-2, 0, 1};
  EXPECT_EQ(count_distinct_real_roots(q, Bound::neg_inf(), Bound::pos_inf()).count, 2u);
  EXPECT_EQ(count_distinct_real_roots(q, Bound::at(1), Bound::at(2)).count, 1u);
  EXPECT_EQ(count_distinct_real_roots(q, Bound::at(Rational(3, 2)), Bound::at(2)).count, 0u);
  // Half-open: a root at the upper end counts, at the lower end does not.
  const IntPoly r{-1, 1};
  EXPECT_EQ(count_distinct_real_roots(r, Bound::at(0), Bound::at(1)).count, 1u);
  EXPECT_EQ(count_distinct_real_roots(r, Bound::at(1), Bound::at(2)).count, 0u);
  EXPECT_THROW(count_distinct_real_roots(r, Bound::at(2), Bound::at(1)), Error);
}

TEST(Sturm, DominationPolynomialsDeflateZero) {
  EXPECT_EQ(sturm_real_root_count(count_by_enumeration(named::path(3)), Bound::neg_inf(), Bound::at(0)).count, 2u);
  EXPECT_EQ(sturm_real_root_count(count_by_enumeration(named::path(4)), Bound::neg_inf(), Bound::pos_inf()).count, 1u);
  EXPECT_EQ(sturm_real_root_count(count_by_enumeration(named::cycle(4)), Bound::neg_inf(), Bound::pos_inf()).count, 0u);
}

TEST(Sturm, Certificates) {
  EXPECT_TRUE(certify_no_nonzero_real_roots(count_by_enumeration(named::cycle(4))));
  EXPECT_TRUE(certify_no_nonzero_real_roots(count_by_enumeration(named::empty(1))));
  EXPECT_FALSE(certify_no_nonzero_real_roots(count_by_enumeration(named::path(3))));
  EXPECT_FALSE(certify_no_nonzero_real_roots(count_by_enumeration(named::path(4))));
  for (std::size_t k : {1u, 3u, 5u, 7u, 9u, 11u, 13u})
    EXPECT_TRUE(certify_no_nonzero_real_roots(count_by_enumeration(named::friendship(k)))) << k;
  EXPECT_FALSE(certify_no_nonzero_real_roots(count_by_enumeration(named::friendship(2))));
}

// Exact counts agree with the numeric root finder whenever no cluster is flagged.
TEST(Sturm, AgreesWithNumericRoots) {
  std::mt19937_64 rng(8);
  int compared = 0;
  for (int t = 0; t < 200; ++t) {
    const auto g = testsupport::random_sized_graph(rng, 1, 10);
    const auto p = count_by_enumeration(g);
    const auto rs = find_all_roots(p);
    if (rs.has_clusters()) continue;
    const auto cls = classify(rs);
    const auto exact = sturm_real_root_count(p, Bound::neg_inf(), Bound::pos_inf()).count;
    EXPECT_EQ(exact, cls.negative_real.size() + cls.positive_real.size()) << to_graph6(g);
    ++compared;
  }
  EXPECT_GT(compared, 100);
}
