#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace domroots;

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(named::complete(3)), "Bw");
  EXPECT_EQ(to_graph6(named::path(3)), "Bg");
  EXPECT_EQ(to_graph6(named::complete(2)), "A_");
  EXPECT_EQ(to_graph6(named::empty(1)), "@");
  EXPECT_EQ(parse_graph6("Bw"), named::complete(3));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), named::complete(3));
}

// Every labeled graph with n <= 6 vertices survives encode/decode.
TEST(Graph6, ExhaustiveRoundTripSmall) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << testsupport::pair_count(n)); ++mask) {
      const auto g = testsupport::labeled_graph(n, mask);
      const auto text = to_graph6(g);
      ASSERT_EQ(parse_graph6(text), g) << text;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1u + 2 + 8 + 64 + 1024 + 32768);
}

TEST(Graph6, LongHeaderRoundTrip) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {62u, 63u, 100u, 128u}) {
    const auto g = testsupport::random_graph(rng, n, 0.3);
    const auto text = to_graph6(g);
    EXPECT_EQ(text[0] == 126, n > 62);
    EXPECT_EQ(parse_graph6(text, 128), g);
  }
}

namespace {

std::size_t offset_of(std::string_view text, std::size_t cap = kDefaultVertexCap) {
  try {
    parse_graph6(text, cap);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "accepted " << text;
  return 999;
}

}  // namespace

TEST(Graph6, RejectsMalformed) {
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("?"), 0u);          // n = 0
  EXPECT_EQ(offset_of("B"), 1u);          // body missing
  EXPECT_EQ(offset_of("Bww"), 2u);        // body too long
  EXPECT_EQ(offset_of("Ag"), 1u);         // padding bits set
  EXPECT_EQ(offset_of("B>"), 1u);         // byte below 63
  EXPECT_EQ(offset_of("~??}"), 0u);       // 62 in the long header
}

TEST(Graph6, CapEnforced) {
  const auto text = to_graph6(named::empty(70));
  EXPECT_EQ(offset_of(text), 0u);
  EXPECT_NO_THROW(parse_graph6(text, 128));
}
