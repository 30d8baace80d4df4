#include <gtest/gtest.h>

#include "ntf/graph.hpp"
#include "test_util.hpp"

using namespace ntf;

namespace {

Hypergraph G(std::size_t n, std::vector<VertexSet> e) { return Hypergraph(n, std::move(e)); }

Hypergraph seventeen_vertex_graph() {
  return G(17, {{1, 2},   {2, 3},   {3, 4},   {4, 5},   {1, 5},   {4, 9},   {9, 10},  {1, 6},
                {6, 7},   {7, 8},   {1, 8},   {1, 11},  {11, 12}, {11, 13}, {13, 14}, {12, 14},
                {5, 12},  {2, 15},  {15, 16}, {3, 16},  {15, 17}, {3, 17}});
}

}  // namespace

TEST(Graph, ConnectivityAndBipartiteness) {
  EXPECT_TRUE(is_connected(G(3, {{1, 2}, {2, 3}})));
  EXPECT_FALSE(is_connected(G(4, {{1, 2}, {3, 4}})));
  EXPECT_TRUE(is_bipartite(G(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
  EXPECT_FALSE(is_bipartite(G(3, {{1, 2}, {2, 3}, {1, 3}})));
  EXPECT_THROW(is_bipartite(G(3, {{1, 2, 3}})), input_error);
}

TEST(Graph, InducedOddCycles) {
  // a pentagon with one chord: its only induced odd cycle is the triangle
  const auto g = G(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}});
  EXPECT_EQ(induced_odd_cycles(g), (std::vector<std::vector<std::size_t>>{{1, 2, 3}}));
  const auto k4 = G(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(induced_odd_cycles(k4).size(), 4u);
}

TEST(Graph, Classification) {
  EXPECT_EQ(classify_graph(G(2, {{1, 2}})).kind, GraphKind::bipartite);
  const auto c5 = classify_graph(G(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}));
  EXPECT_EQ(c5.kind, GraphKind::almost_bipartite);
  EXPECT_EQ(c5.cycle, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  const auto k4 = classify_graph(G(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(k4.kind, GraphKind::other);
  EXPECT_EQ(k4.induced_odd_cycle_count, 4u);
  EXPECT_THROW(classify_graph(G(4, {{1, 2}, {3, 4}})), input_error);
  EXPECT_STREQ(to_string(GraphKind::almost_bipartite), "almost_bipartite");
}

TEST(Graph, InducedSubgraph) {
  const auto g = G(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(induced_subgraph(g, {2, 3, 4}).edges(), (std::vector<VertexSet>{{2, 3}, {3, 4}}));
}

TEST(Graph, SeventeenVertexDecomposition) {
  const auto d = almost_bipartite_decomposition(seventeen_vertex_graph());
  EXPECT_EQ(d.cycle, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(d.a_sets.at(1), (VertexSet{6, 7, 8}));
  EXPECT_EQ(d.a_sets.at(4), (VertexSet{9, 10}));
  EXPECT_TRUE(d.a_sets.at(2).empty());
  EXPECT_TRUE(d.a_sets.at(3).empty());
  EXPECT_TRUE(d.a_sets.at(5).empty());
  EXPECT_EQ(d.b_sets.at({1, 5}), (VertexSet{11, 12, 13, 14}));
  EXPECT_EQ(d.b_sets.at({2, 3}), (VertexSet{15, 16, 17}));
  EXPECT_TRUE(d.b_sets.at({1, 2}).empty());
  EXPECT_TRUE(d.b_sets.at({3, 4}).empty());
  EXPECT_TRUE(d.b_sets.at({4, 5}).empty());
  EXPECT_TRUE(d.partition_holds);
  EXPECT_TRUE(d.parts_bipartite);
}

TEST(Graph, DecompositionNeedsAlmostBipartite) {
  EXPECT_THROW(almost_bipartite_decomposition(G(2, {{1, 2}})), input_error);
}

TEST(Gluing, TrianglesAtAVertex) {
  const auto g1 = G(5, {{1, 2}, {2, 3}, {1, 3}});
  const auto g2 = G(5, {{3, 4}, {4, 5}, {3, 5}});
  const auto r = verify_gluing(g1, g2, 3);
  EXPECT_EQ(r.kind, GluingKind::shared_vertex);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.glued.edges().size(), 6u);
}

TEST(Gluing, SquaresAlongAnEdge) {
  const auto g1 = G(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const auto g2 = G(6, {{3, 4}, {4, 5}, {5, 6}, {3, 6}});
  const auto r = verify_gluing(g1, g2, 3);
  EXPECT_EQ(r.kind, GluingKind::shared_edge);
  EXPECT_TRUE(r.holds);
}

TEST(Gluing, RejectsOtherOverlaps) {
  const auto g1 = G(4, {{1, 2}, {2, 3}});
  const auto g2 = G(4, {{1, 4}, {3, 4}});
  EXPECT_THROW(verify_gluing(g1, g2, 2), input_error);
  EXPECT_THROW(verify_gluing(g1, G(3, {{3, 1}}), 2), input_error);
}
