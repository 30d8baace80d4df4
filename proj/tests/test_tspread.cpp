#include <gtest/gtest.h>

#include "ntf/hypergraph.hpp"
#include "ntf/io.hpp"
#include "ntf/properties.hpp"
#include "ntf/tspread.hpp"
#include "test_util.hpp"

using namespace ntf;

namespace {

std::vector<std::string> row_texts(const BorelSpec& s) {
  std::vector<std::string> out;
  for (const auto& row : borel_table(s)) {
    std::string line;
    for (const auto& m : row) line += (line.empty() ? "" : " ") + to_compact(m);
    out.push_back(line);
  }
  return out;
}

// Every t-spread u with t <= max_t, degree <= max_d and i_d <= max_n.
std::vector<BorelSpec> all_specs(unsigned max_t, std::size_t max_d, std::size_t max_n) {
  std::vector<BorelSpec> out;
  for (unsigned t = 1; t <= max_t; ++t) {
    std::vector<std::size_t> idx;
    std::function<void()> grow = [&] {
      if (!idx.empty()) out.emplace_back(t, idx);
      if (idx.size() == max_d) return;
      const std::size_t lo = idx.empty() ? 1 : idx.back() + t;
      for (std::size_t v = lo; v <= max_n; ++v) {
        idx.push_back(v);
        grow();
        idx.pop_back();
      }
    };
    grow();
  }
  return out;
}

}  // namespace

TEST(BorelSpec, Validation) {
  EXPECT_THROW(BorelSpec(0, {1, 2}), input_error);
  EXPECT_THROW(BorelSpec(3, {}), input_error);
  EXPECT_THROW(BorelSpec(3, {2, 4}), input_error);
  EXPECT_THROW(BorelSpec::from_monomial(1, M(2, 1)), input_error);
  const auto s = BorelSpec::from_monomial(3, M(0, 0, 0, 1, 0, 0, 1));
  EXPECT_EQ(s, BorelSpec(3, {4, 7}));
  EXPECT_EQ(s.num_vars(), 7u);
  EXPECT_EQ(s.degree(), 2u);
}

TEST(BorelSpec, TableLayout) {
  EXPECT_EQ(row_texts(BorelSpec(3, {4, 7})),
            (std::vector<std::string>{"x1x4", "x1x5 x2x5", "x1x6 x2x6 x3x6", "x1x7 x2x7 x3x7 x4x7"}));
  EXPECT_EQ(borel_generators(BorelSpec(3, {4, 7})).size(), 10u);
  EXPECT_EQ(borel_generators(BorelSpec(3, {4, 7, 10})).size(), 20u);
  EXPECT_EQ(borel_generators(BorelSpec(2, {1, 3})), I("vars=3; x1*x3"));
}

TEST(BorelSpec, GeneratorsAreTSpreadAndBelowU) {
  for (const auto& s : all_specs(3, 3, 9)) {
    for (const auto& j : borel_index_tuples(s)) {
      for (std::size_t k = 0; k < j.size(); ++k) {
        EXPECT_LE(j[k], s.indices()[k]);
        if (k > 0) {
          EXPECT_GE(j[k], j[k - 1] + s.t());
        }
      }
    }
  }
}

TEST(BorelSpec, Intervals) {
  const auto a = a_intervals(BorelSpec(3, {2, 5, 9}));
  EXPECT_EQ(a.intervals, (std::vector<Interval>{{1, 2}, {4, 5}, {7, 9}}));
  EXPECT_EQ(a.unsupported, (std::vector<std::size_t>{3, 6}));
  EXPECT_EQ(a.intervals[2].size(), 3u);
}

TEST(BorelSpec, DeletionStaysBorel) {
  const auto del = deletion(borel_generators(BorelSpec(3, {2, 5, 9})), 5);
  const auto spec = recognize_borel(del);
  ASSERT_TRUE(spec.has_value());
  EXPECT_EQ(*spec, BorelSpec(3, {1, 4, 9}));
}

TEST(LinearRelation, WitnessesAndComponents) {
  const auto g = linear_relation_graph(borel_generators(BorelSpec(3, {3, 6, 9})));
  EXPECT_EQ(g.components, (std::vector<std::vector<std::size_t>>{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  for (const auto& e : g.edges) {
    EXPECT_LT(e.i, e.j);
    EXPECT_EQ(Monomial::variable(9, e.i) * e.left, Monomial::variable(9, e.j) * e.right);
  }
  EXPECT_EQ(analytic_spread(BorelSpec(3, {3, 6, 9})), 7u);
  EXPECT_EQ(analytic_spread(BorelSpec(3, {4, 7})), 7u);
}

// Once i_k > kt, the graph is complete on A_k, ..., A_d and connected on
// their union.
TEST(LinearRelation, CompleteOnOverlappingIntervals) {
  for (const auto& s : all_specs(3, 3, 9)) {
    const auto g = linear_relation_graph(borel_generators(s));
    const auto a = a_intervals(s);
    std::size_t first = s.degree();
    for (std::size_t k = 0; k < s.degree(); ++k) {
      if (s.indices()[k] > (k + 1) * s.t()) {
        first = k;
        break;
      }
    }
    if (first == s.degree()) continue;
    for (std::size_t k = first; k < s.degree(); ++k) {
      const auto& in = a.intervals[k];
      for (std::size_t x = in.lo; x <= in.hi; ++x) {
        for (std::size_t y = x + 1; y <= in.hi; ++y) EXPECT_TRUE(g.has_edge(x, y)) << x << "," << y;
      }
    }
    const std::size_t lo = a.intervals[first].lo;
    const auto comp = std::find_if(g.components.begin(), g.components.end(),
                                   [&](const auto& c) { return std::find(c.begin(), c.end(), lo) != c.end(); });
    ASSERT_NE(comp, g.components.end());
    for (std::size_t v = lo; v <= s.num_vars(); ++v) {
      EXPECT_NE(std::find(comp->begin(), comp->end(), v), comp->end());
    }
  }
}

TEST(LinearRelation, SpreadRefusesOtherIdeals) {
  EXPECT_THROW(analytic_spread(I("vars=3; x1*x2, x3^2")), input_error);
  EXPECT_EQ(analytic_spread(borel_generators(BorelSpec(3, {4, 7}))), 7u);
  EXPECT_FALSE(recognize_borel(I("vars=4; x1*x2, x3*x4")).has_value());
}

TEST(Classify, NtfIffUniformPartite) {
  for (const auto& s : all_specs(3, 3, 9)) {
    const auto c = classify_ntf(s);
    const auto parts = is_d_uniform_d_partite(hypergraph_of(borel_generators(s)));
    EXPECT_EQ(c.ntf, parts.has_value()) << to_text(s.u());
  }
  EXPECT_TRUE(classify_ntf(BorelSpec(3, {3, 6, 9})).ntf);
  EXPECT_FALSE(classify_ntf(BorelSpec(3, {4, 7})).ntf);
  EXPECT_TRUE(classify_ntf(BorelSpec(2, {5})).ntf);
}

TEST(Classify, DegreeTwo) {
  EXPECT_EQ(classify_degree2(BorelSpec(2, {2, 5})).verdict, TspreadVerdict::ntf);
  EXPECT_EQ(classify_degree2(BorelSpec(3, {4, 7})).verdict, TspreadVerdict::nearly_ntf);
  EXPECT_FALSE(classify_degree2(BorelSpec(3, {2, 5})).covered);
  EXPECT_EQ(is_nearly_ntf_up_to(borel_generators(BorelSpec(3, {4, 7})), 3).verdict, Verdict::nearly_ntf);
  EXPECT_THROW(classify_degree2(BorelSpec(1, {1, 2, 3})), input_error);
}

TEST(Classify, DegreeThree) {
  const auto ntf_case = classify_degree3(BorelSpec(2, {2, 4, 6}));
  EXPECT_EQ(ntf_case.verdict, TspreadVerdict::ntf);
  const auto nearly = BorelSpec(1, {1, 3, 4});
  EXPECT_EQ(classify_degree3(nearly).verdict, TspreadVerdict::nearly_ntf);
  EXPECT_EQ(is_nearly_ntf_up_to(borel_generators(nearly), 3).verdict, Verdict::nearly_ntf);

  const auto bad = BorelSpec(1, {2, 3, 4});
  const auto c = classify_degree3(bad);
  EXPECT_EQ(c.verdict, TspreadVerdict::not_nearly_ntf);
  ASSERT_EQ(c.witness_primes.size(), 2u);
  EXPECT_EQ(c.witness_primes[0], P(4, {2, 3, 4}));
  EXPECT_EQ(c.witness_primes[1], P(4, {1, 3, 4}));
  const auto ideal = borel_generators(bad);
  EXPECT_EQ(is_nearly_ntf_up_to(ideal, 3).verdict, Verdict::fails);
  for (const auto& p : c.witness_primes) {
    bool seen = false;
    for (unsigned k = 2; k <= 3 && !seen; ++k) seen = is_associated_prime(power(ideal, k), p);
    EXPECT_TRUE(seen) << to_text(p);
  }
}

TEST(Relabel, ShiftAndUnshift) {
  const auto a = I("vars=5; x4*x5, x3^2");
  const auto s = relabel_shift(a, 2);
  EXPECT_EQ(s, I("vars=3; x2*x3, x1^2"));
  EXPECT_EQ(relabel_unshift(s, 2), a);
  EXPECT_THROW(relabel_shift(a, 3), input_error);
  EXPECT_THROW(relabel_shift(a, 5), input_error);
}
