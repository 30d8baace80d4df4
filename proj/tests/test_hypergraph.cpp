#include <gtest/gtest.h>

#include "ntf/hypergraph.hpp"
#include "ntf/properties.hpp"
#include "ntf/tspread.hpp"
#include "property_suites.hpp"
#include "test_util.hpp"

using namespace ntf;

namespace {

Hypergraph cycle_graph(std::size_t n) {
  std::vector<VertexSet> e;
  for (std::size_t i = 1; i <= n; ++i) e.push_back({i, i % n + 1});
  return Hypergraph(n, e);
}

}  // namespace

TEST(Hypergraph, ConstructionValidates) {
  EXPECT_THROW(Hypergraph(3, {{1, 4}}), input_error);
  EXPECT_THROW(Hypergraph(3, {{}}), input_error);
  EXPECT_THROW(Hypergraph(3, {{1, 1}}), input_error);
  EXPECT_THROW(Hypergraph(3, {{1, 2}, {1, 2, 3}}), input_error);
  const Hypergraph h(3, {{2, 1}, {3, 2}});
  EXPECT_EQ(h.edges(), (std::vector<VertexSet>{{1, 2}, {2, 3}}));
  EXPECT_TRUE(h.is_graph());
  EXPECT_EQ(h.covered_vertices(), (VertexSet{1, 2, 3}));
}

TEST(Hypergraph, EdgeIdealRoundTrip) {
  const auto a = I("vars=4; x1*x2*x3, x3*x4");
  EXPECT_EQ(edge_ideal(hypergraph_of(a)), a);
  EXPECT_THROW(hypergraph_of(I("vars=2; x1^2")), input_error);
}

TEST(Hypergraph, MinimalVertexCoversOfPentagon) {
  const auto covers = minimal_vertex_covers(cycle_graph(5));
  EXPECT_EQ(covers, (std::vector<VertexSet>{{1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}}));
}

TEST(Hypergraph, CoverIdealIsDual) {
  const Hypergraph h(5, {{3, 5}, {2, 5}, {2, 4}, {1, 4}, {1, 3}});
  EXPECT_EQ(cover_ideal(h), I("vars=5; x1*x2*x3, x2*x3*x4, x3*x4*x5, x4*x5*x1, x5*x1*x2"));
}

TEST(Hypergraph, WhiskerAddsPendantVertex) {
  const auto w = whisker(Hypergraph(2, {{1, 2}}), 2);
  EXPECT_EQ(w.num_vertices(), 3u);
  EXPECT_EQ(w.edges(), (std::vector<VertexSet>{{1, 2}, {2, 3}}));
  EXPECT_THROW(whisker(w, 4), input_error);
}

TEST(Hypergraph, WhiskerAddsOnlyTheNewEdgePrime) {
  const auto g = cycle_graph(4);
  for (std::size_t v = 1; v <= 4; ++v) {
    const auto h = whisker(g, v);
    const auto base = ass_of_powers(cover_ideal(g), 3);
    const auto wh = ass_of_powers(cover_ideal(h), 3);
    for (unsigned s = 1; s <= 3; ++s) {
      std::set<std::vector<std::size_t>> expected;
      for (const auto& p : base.at(s)) expected.insert(p.vars());
      expected.insert({v, 5});
      EXPECT_EQ(suites::as_sets(wh.at(s)), expected) << "vertex " << v << " power " << s;
    }
  }
}

TEST(Hypergraph, CanonicalCycleRotatesAndReflects) {
  const HyperCycle c{{9, 5, 1}, {{2, 5, 9, 12}, {1, 5, 8, 11}, {1, 4, 9, 12}}};
  const auto k = canonical_cycle(c);
  EXPECT_EQ(k.vertices, (std::vector<std::size_t>{1, 5, 9}));
  EXPECT_EQ(k.edges, (std::vector<VertexSet>{{1, 5, 8, 11}, {2, 5, 9, 12}, {1, 4, 9, 12}}));
  EXPECT_EQ(canonical_cycle(k), k);
}

TEST(Hypergraph, OddCycleGraphHasSpecialCycle) {
  const auto cycles = special_odd_cycles(cycle_graph(5), 5);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles.front().vertices, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_TRUE(special_odd_cycles(cycle_graph(4), 5).empty());
  EXPECT_TRUE(special_odd_cycles(cycle_graph(7), 5).empty());
}

TEST(Hypergraph, BorelHypergraphSpecialCycle) {
  const auto h = hypergraph_of(borel_generators(BorelSpec(3, {3, 6, 9, 12})));
  const auto cycles = special_odd_cycles(h, 3);
  const HyperCycle expected = canonical_cycle({{1, 9, 5}, {{1, 4, 9, 12}, {2, 5, 9, 12}, {1, 5, 8, 11}}});
  EXPECT_NE(std::find(cycles.begin(), cycles.end(), expected), cycles.end());
  for (const auto& c : cycles) {
    EXPECT_EQ(c.vertices.size() % 2, 1u);
    for (const auto& e : c.edges) {
      const auto inside = std::count_if(c.vertices.begin(), c.vertices.end(),
                                        [&](std::size_t v) { return std::binary_search(e.begin(), e.end(), v); });
      EXPECT_EQ(inside, 2);
    }
  }
}

TEST(Hypergraph, UniformPartite) {
  const auto parts = is_d_uniform_d_partite(hypergraph_of(borel_generators(BorelSpec(3, {3, 6, 9}))));
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(*parts, (std::vector<VertexSet>{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  EXPECT_FALSE(is_d_uniform_d_partite(cycle_graph(3)).has_value());
  EXPECT_TRUE(is_d_uniform_d_partite(cycle_graph(4)).has_value());
}

TEST(PropertySuites, DualInvolutionSmall) {
  const auto r = suites::dual_involution(60, 107);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Hypergraph, AllEdgesConditionIsStricter) {
  const auto h = hypergraph_of(borel_generators(BorelSpec(3, {3, 6, 9, 12})));
  const auto loose = special_odd_cycles(h, 3, SpecialCondition::cycle_edges);
  const auto strict = special_odd_cycles(h, 3, SpecialCondition::all_edges);
  for (const auto& c : strict) EXPECT_NE(std::find(loose.begin(), loose.end(), c), loose.end());
  for (const auto& c : strict) {
    for (const auto& e : h.edges()) {
      const auto inside = std::count_if(c.vertices.begin(), c.vertices.end(),
                                        [&](std::size_t v) { return std::binary_search(e.begin(), e.end(), v); });
      EXPECT_LE(inside, 2);
    }
  }
}
