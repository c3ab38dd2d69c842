#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace domroots;

namespace {

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no domroots::Error thrown";
  return ErrorKind::Invalid;
}

}  // namespace

TEST(VertexSet, BasicOps) {
  auto s = VertexSet::of({0, 3, 70});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(70));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.bound(), 71u);
  s.erase(70);
  EXPECT_EQ(s.bound(), 4u);
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 3}));
  EXPECT_TRUE(s.subset_of(VertexSet::full(4)));
  EXPECT_FALSE(s.intersects(VertexSet::of({1, 2})));
  EXPECT_EQ(VertexSet::full(128).size(), 128u);
  EXPECT_TRUE(VertexSet().empty());
}

TEST(Graph, FromEdgesRejectsBadInput) {
  EXPECT_EQ(kind_of([] { Graph::from_edges(3, {{0, 3}}); }), ErrorKind::InvalidEdge);
  EXPECT_EQ(kind_of([] { Graph::from_edges(3, {{1, 1}}); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { Graph::from_edges(0, {}); }), ErrorKind::InvalidGraph);
  EXPECT_EQ(kind_of([] { Graph::from_edges(65, {}); }), ErrorKind::TooLarge);
  EXPECT_NO_THROW(Graph::from_edges(65, {}, 128));
}

TEST(Graph, DuplicateEdgesMerge) {
  const auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(0), 1u);
}

TEST(Graph, AdjacencyChecksSymmetry) {
  std::vector<VertexSet> adj(2);
  adj[0].insert(1);
  EXPECT_EQ(kind_of([&] { Graph::from_adjacency(adj); }), ErrorKind::InvalidGraph);
  adj[1].insert(0);
  EXPECT_EQ(Graph::from_adjacency(adj), named::path(2));
}

TEST(Graph, VertexOutOfRange) {
  const auto g = named::path(3);
  EXPECT_EQ(kind_of([&] { (void)g.neighbors(3); }), ErrorKind::InvalidVertex);
}

TEST(Graph, ClosedNeighborhoodAndDomination) {
  const auto p = named::path(4);
  EXPECT_EQ(closed_neighborhood(p, 1), VertexSet::of({0, 1, 2}));
  EXPECT_TRUE(is_dominating(p, VertexSet::of({1, 2})));
  EXPECT_TRUE(is_dominating(p, VertexSet::of({0, 3})));
  EXPECT_FALSE(is_dominating(p, VertexSet::of({0, 1})));
  EXPECT_FALSE(is_dominating(p, VertexSet()));
}

TEST(Graph, NamedFamiliesShape) {
  EXPECT_EQ(named::complete(6).edge_count(), 15u);
  EXPECT_EQ(named::cycle(7).edge_count(), 7u);
  EXPECT_EQ(named::complete_bipartite(2, 3).edge_count(), 6u);
  EXPECT_EQ(named::star(5).degree(0), 5u);
  const auto f = named::friendship(3);
  EXPECT_EQ(f.order(), 7u);
  EXPECT_EQ(f.edge_count(), 9u);
  EXPECT_TRUE(every_vertex_in_triangle(f));
  EXPECT_FALSE(every_vertex_in_triangle(named::path(3)));
  EXPECT_EQ(named::windmill(2, 3).order(), 7u);
  EXPECT_EQ(kind_of([] { named::cycle(2); }), ErrorKind::Invalid);
}

TEST(Graph, EdgesRoundTrip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto g = testsupport::random_sized_graph(rng, 1, 12);
    EXPECT_EQ(Graph::from_edges(g.order(), g.edges()), g);
  }
}
