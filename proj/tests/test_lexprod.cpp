#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace domroots;

TEST(LexProduct, GraphStructure) {
  const auto g = lex_product_graph(named::path(3), named::empty(2));
  EXPECT_EQ(g.order(), 6u);
  // Each edge of P3 becomes K_{2,2}; H has no edges.
  EXPECT_EQ(g.edge_count(), 8u);
  const auto k = lex_product_graph(named::complete(2), named::complete(3));
  EXPECT_EQ(k, named::complete(6));
  EXPECT_EQ(ProductIndex::from_flat(ProductIndex{2, 1}.flat(3), 3), (ProductIndex{2, 1}));
}

TEST(LexProduct, TooLarge) {
  EXPECT_THROW(lex_product_graph(named::empty(12), named::empty(11)), Error);
}

TEST(LexProduct, KnownPolynomial) {
  // K2[P3]
  const auto p = lex_product_polynomial(named::complete(2), named::path(3));
  EXPECT_EQ(p.as_poly(), (IntPoly{0, 2, 15, 20, 15, 6, 1}));
}

TEST(LexProduct, GeneralFormulaMatchesOracle) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const auto g = testsupport::random_sized_graph(rng, 1, 5);
    const auto h = testsupport::random_sized_graph(rng, 1, 4);
    const auto product = lex_product_graph(g, h);
    EXPECT_EQ(lex_product_polynomial(g, h), testsupport::naive_polynomial(product))
        << to_graph6(g) << " " << to_graph6(h);
  }
}

TEST(LexProduct, CompositionNeedsCompleteH) {
  try {
    lex_product_polynomial(named::path(3), named::path(3), LexFormula::Composition);
    FAIL() << "composition accepted a non-complete H";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisNotMet);
  }
  const auto report = cross_check_product(named::path(3), named::path(3), LexFormula::Composition);
  EXPECT_FALSE(report.hypothesis_met());
  EXPECT_FALSE(report.failed_condition.empty());
  EXPECT_EQ(report.enumeration_polynomial, count_by_enumeration(lex_product_graph(named::path(3), named::path(3))));
}

TEST(LexProduct, CompositionAgreesWithGeneral) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const auto& g : {named::path(4), named::cycle(5), named::star(3)}) {
      EXPECT_EQ(lex_product_polynomial(g, named::complete(m), LexFormula::Composition),
                lex_product_polynomial(g, named::complete(m), LexFormula::General));
    }
  }
}

TEST(LexProduct, CompleteRootsMatchDirectRoots) {
  const auto dg = count_by_enumeration(named::star(3));
  const auto via_product = lex_complete_roots(dg, 2);
  const auto composed = lex_product_polynomial(named::star(3), named::complete(2), LexFormula::Composition);
  const auto direct = find_all_roots(composed);
  EXPECT_EQ(via_product.degree(), composed.order());
  EXPECT_EQ(via_product.zero_multiplicity, direct.zero_multiplicity);
  EXPECT_LT(testsupport::reconstruction_error(composed, via_product), 1e-9);
  for (const auto& z : direct.roots) {
    double best = 1e9;
    for (const auto& w : via_product.roots) best = std::min(best, std::abs(z - w));
    EXPECT_LT(best, 1e-6);
  }
}

TEST(LexProduct, ReportJson) {
  const nlohmann::json j = cross_check_product(named::complete(2), named::path(3));
  EXPECT_EQ(j.at("equal"), true);
  EXPECT_EQ(j.at("formula"), "general");
  EXPECT_TRUE(j.at("first_difference").is_null());
}
