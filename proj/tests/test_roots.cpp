#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace domroots;

TEST(Roots, CycleFourExact) {
  const auto rs = find_all_roots(count_by_enumeration(named::cycle(4)));
  EXPECT_EQ(rs.zero_multiplicity, 2u);
  ASSERT_EQ(rs.roots.size(), 2u);
  for (const auto& z : rs.roots) {
    EXPECT_NEAR(z.real(), -2.0, 1e-9);
    EXPECT_NEAR(std::abs(z.imag()), std::sqrt(2.0), 1e-9);
  }
  EXPECT_FALSE(rs.has_clusters());
}

TEST(Roots, DoubleRootFlaggedAsCluster) {
  const auto rs = find_all_roots(count_by_enumeration(named::path(4)));
  EXPECT_EQ(rs.zero_multiplicity, 2u);
  ASSERT_EQ(rs.roots.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_TRUE(rs.clustered[k]);
    EXPECT_NEAR(rs.roots[k].real(), -2.0, 1e-6);
  }
}

TEST(Roots, RejectsDegenerateInput) {
  EXPECT_THROW(find_all_roots(IntPoly{}), Error);
  EXPECT_THROW(find_all_roots(IntPoly{5}), Error);
  const auto monomial = find_all_roots(IntPoly{0, 0, 3});
  EXPECT_TRUE(monomial.roots.empty());
  EXPECT_EQ(monomial.zero_multiplicity, 2u);
}

TEST(Roots, CompleteGraphRootsOnUnitCircleAboutMinusOne) {
  for (std::size_t n = 2; n <= 24; ++n) {
    const auto rs = find_all_roots(count_by_enumeration(named::complete(n)));
    for (const auto& z : rs.roots) EXPECT_NEAR(std::abs(z + 1.0), 1.0, 1e-9) << "K" << n;
  }
}

TEST(Roots, RandomGraphsConjugateClosedAndAccurate) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 150; ++t) {
    const auto g = testsupport::random_sized_graph(rng, 1, 12);
    const auto p = count_by_enumeration(g);
    const auto rs = find_all_roots(p);
    EXPECT_EQ(rs.degree(), g.order());
    EXPECT_EQ(rs.zero_multiplicity, domination_number(p));
    const auto cls = classify(rs);
    EXPECT_TRUE(cls.unpaired.empty()) << to_graph6(g);
    EXPECT_EQ(cls.total(), g.order());
    EXPECT_LT(testsupport::reconstruction_error(p, rs), 1e-6) << to_graph6(g);
    // Positive reals cannot be roots of a polynomial with nonnegative coefficients.
    EXPECT_TRUE(cls.positive_real.empty());
  }
}

TEST(Roots, ResidualsBelowTolerance) {
  const auto rs = find_all_roots(count_by_enumeration(named::friendship(9)));
  for (std::size_t k = 0; k < rs.roots.size(); ++k) EXPECT_LE(rs.residuals[k], 1e-12);
}

TEST(Roots, NoConvergenceCarriesBestEffort) {
  RootFinderOptions strict;
  strict.max_iterations = 1;
  strict.residual_tolerance = 0.0;
  strict.cluster_residual_tolerance = 0.0;
  try {
    find_all_roots(count_by_enumeration(named::cycle(9)), strict);
    FAIL() << "expected NoConvergence";
  } catch (const NoConvergence& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoConvergence);
    EXPECT_EQ(e.best().degree(), 9u);
  }
}

TEST(Roots, ClassifyFriendship) {
  // F_7 has roots with positive real part, F_3 does not.
  EXPECT_TRUE(classify(find_all_roots(count_by_enumeration(named::friendship(7)))).has_positive_real_part);
  EXPECT_FALSE(classify(find_all_roots(count_by_enumeration(named::friendship(3)))).has_positive_real_part);
}

TEST(Roots, JsonShape) {
  const nlohmann::json j = find_all_roots(count_by_enumeration(named::cycle(4)));
  EXPECT_EQ(j.at("zero_multiplicity"), 2);
  EXPECT_EQ(j.at("roots").size(), 2u);
  EXPECT_TRUE(j.at("roots")[0].contains("residual"));
}
