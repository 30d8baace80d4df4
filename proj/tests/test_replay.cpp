#include <gtest/gtest.h>

#include "replay.hpp"

namespace {

const replay::Json& fixtures() {
  static const replay::Json f = replay::load_fixtures(NTF_FIXTURE_FILE);
  return f;
}

class Replay : public ::testing::TestWithParam<std::string> {};

TEST_P(Replay, MatchesExpected) {
  const auto* c = replay::find_case(fixtures(), GetParam());
  ASSERT_NE(c, nullptr);
  const auto o = replay::run_case(*c);
  std::string all;
  for (const auto& m : o.mismatches) all += m + "\n";
  EXPECT_TRUE(o.pass) << all;
}

INSTANTIATE_TEST_SUITE_P(Fixtures, Replay, ::testing::ValuesIn(replay::case_names(fixtures())),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s) {
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           }
                           return s;
                         });

TEST(ReplayFile, CasesAreWellFormed) {
  const auto names = replay::case_names(fixtures());
  EXPECT_GE(names.size(), 10u);
  for (const auto& c : fixtures().at("cases")) {
    EXPECT_TRUE(c.contains("origin"));
    EXPECT_TRUE(c.contains("expected"));
  }
  EXPECT_EQ(replay::find_case(fixtures(), "no-such-case"), nullptr);
}

}  // namespace
