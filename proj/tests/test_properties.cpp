#include <gtest/gtest.h>

#include "ntf/properties.hpp"
#include "ntf/tspread.hpp"
#include "search.hpp"
#include "property_suites.hpp"
#include "test_util.hpp"

using namespace ntf;

namespace {

const char* kExample = "vars=3; x2^4, x1*x2^3, x1^3*x2, x1^4*x3";

}  // namespace

TEST(Ntf, ExampleIsNearlyButNotNtf) {
  const auto a = I(kExample);
  const auto strict = is_ntf_up_to(a, 3);
  EXPECT_EQ(strict.verdict, Verdict::fails);
  ASSERT_TRUE(strict.failure_power.has_value());
  EXPECT_EQ(*strict.failure_power, 2u);
  EXPECT_EQ(strict.witness_primes, (std::vector<PrimeSupport>{PrimeSupport::maximal(3)}));

  const auto nearly = is_nearly_ntf_up_to(a, 3);
  EXPECT_EQ(nearly.verdict, Verdict::nearly_ntf);
  ASSERT_TRUE(nearly.exceptional_prime.has_value());
  EXPECT_EQ(*nearly.exceptional_prime, PrimeSupport::maximal(3));
  EXPECT_EQ(nearly.threshold, 1u);
  EXPECT_EQ(nearly.profile.max_power(), 3u);
}

TEST(Ntf, BipartiteEdgeIdealIsNtf) {
  const auto a = I("vars=4; x1*x2, x2*x3, x3*x4, x1*x4");
  const auto r = is_ntf_up_to(a, 3);
  EXPECT_EQ(r.verdict, Verdict::ntf);
  for (const auto& [k, eq] : r.symbolic_equals_ordinary) EXPECT_TRUE(eq) << k;
}

TEST(Ntf, EmbeddedPrimeAtPowerOneFailsNearly) {
  const auto a = I("vars=2; x1^2, x1*x2");
  const auto r = is_nearly_ntf_up_to(a, 2);
  EXPECT_EQ(r.verdict, Verdict::fails);
  EXPECT_EQ(r.failure_power, std::optional<unsigned>(1));
}

TEST(Ntf, ZeroBoundIsRejected) {
  EXPECT_THROW(is_ntf_up_to(I(kExample), 0), input_error);
  EXPECT_THROW(persistence_checks(I(kExample), 0), input_error);
}

TEST(Persistence, ExampleFailsStrongPersistence) {
  const auto r = persistence_checks(I(kExample), 3);
  EXPECT_TRUE(r.persistence);
  EXPECT_FALSE(r.strong);
  EXPECT_EQ(r.first_strong_violation, std::optional<unsigned>(1));
}

TEST(Persistence, NtfIdealsPersist) {
  const auto r = persistence_checks(I("vars=3; x1*x2, x2*x3"), 3);
  EXPECT_TRUE(r.persistence);
  EXPECT_TRUE(r.strong);
  EXPECT_TRUE(r.symbolic_strong);
  EXPECT_FALSE(r.first_violation.has_value());
}

TEST(Localization, CriterionOnTriangleCover) {
  // every proper localization of the triangle cover ideal is a prime or a
  // product of variables, so the criterion predicts nearly ntf
  const auto r = localization_criterion_check(I("vars=3; x1*x2, x1*x3, x2*x3"), 3);
  EXPECT_TRUE(r.precondition_holds);
  EXPECT_TRUE(r.predicted_nearly_ntf);
  ASSERT_TRUE(r.conclusion.has_value());
  EXPECT_EQ(r.conclusion->verdict, Verdict::nearly_ntf);
  EXPECT_TRUE(r.consistent);
  EXPECT_EQ(r.entries.size(), 3u);
}

TEST(Localization, EmbeddedPrimeSkipsCriterion) {
  const auto r = localization_criterion_check(I("vars=2; x1^2, x1*x2"), 2);
  EXPECT_FALSE(r.precondition_holds);
  EXPECT_FALSE(r.conclusion.has_value());
}

TEST(IntersectionType, FamilyIsNearlyNtf) {
  const std::vector<std::vector<unsigned>> families{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {2, 2, 2}, {1, 1, 1, 1}, {1, 2, 1, 2}};
  for (const auto& d : families) {
    const auto a = intersection_type_ideal(d);
    EXPECT_EQ(is_nearly_ntf_up_to(a, 3).verdict, Verdict::nearly_ntf) << to_text(a);
  }
  EXPECT_EQ(intersection_type_ideal({1, 1}), I("vars=2; x1*x2"));
  EXPECT_THROW(intersection_type_ideal({1}), input_error);
}

TEST(IntersectionType, LocalizationCriterionPredictsNearlyNtf) {
  const auto r = localization_criterion_check(intersection_type_ideal({1, 2, 1}), 3);
  EXPECT_TRUE(r.precondition_holds);
  EXPECT_TRUE(r.predicted_nearly_ntf);
  EXPECT_TRUE(r.consistent);
}

TEST(PropertySuites, ShiftLawSmall) {
  const auto r = suites::ass_shift_law(60, 104);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(PropertySuites, MultipleRoundTripSmall) {
  const auto r = suites::multiple_round_trip(40, 105);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(PropertySuites, SymbolicSmall) {
  const auto r = suites::symbolic_vs_ntf(40, 106);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Localization, BorelExamplePredictsNearlyNtf) {
  const auto r = localization_criterion_check(borel_generators(BorelSpec(3, {4, 7})), 3);
  EXPECT_TRUE(r.precondition_holds);
  EXPECT_TRUE(r.predicted_nearly_ntf);
  EXPECT_TRUE(r.consistent);
  EXPECT_EQ(r.entries.size(), 7u);
}

TEST(Ntf, FailingVerdictsStayFailingForLargerBounds) {
  std::mt19937 rng(31);
  for (int c = 0; c < 80; ++c) {
    const auto a = suites::random_ideal(rng, suites::pick(rng, 2, 3), 3, 2);
    const auto small = is_nearly_ntf_up_to(a, 2);
    const auto large = is_nearly_ntf_up_to(a, 3);
    if (small.verdict == Verdict::fails) {
      EXPECT_EQ(large.verdict, Verdict::fails) << to_text(a);
      EXPECT_EQ(large.failure_power, small.failure_power) << to_text(a);
    }
    if (is_ntf_up_to(a, 2).verdict == Verdict::fails) {
      EXPECT_EQ(is_ntf_up_to(a, 3).verdict, Verdict::fails);
    }
  }
}

TEST(Persistence, StrongImpliesPersistence) {
  std::mt19937 rng(32);
  for (int c = 0; c < 80; ++c) {
    const auto a = suites::random_ideal(rng, suites::pick(rng, 2, 3), 3, 2);
    const auto r = persistence_checks(a, 3);
    if (r.strong) {
      EXPECT_TRUE(r.persistence) << to_text(a);
    }
  }
}

TEST(Persistence, SearchHarnessReportsConsistently) {
  const auto r = search::nearly_ntf_persistence(60, 7, 5, 3);
  EXPECT_EQ(r.cases, 60u);
  EXPECT_LE(r.nearly_ntf, r.cases);
  EXPECT_LE(r.with_embedded, r.nearly_ntf);
  EXPECT_EQ(r.strong_without_persistence, 0u);
  EXPECT_THROW(search::nearly_ntf_persistence(1, 1, 1, 2), input_error);
}
