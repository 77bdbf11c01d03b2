#include <gtest/gtest.h>

#include "common.hpp"

using namespace fuchsian;
using namespace testing_support;

class MarkovAllModes : public ::testing::TestWithParam<std::string> {};

TEST_P(MarkovAllModes, RefinementIsMarkov) {
  const auto& p = polygon(GetParam());
  for (auto mode : {partition_mode::left, partition_mode::right, partition_mode::midpoint}) {
    auto part = make_partition(p, mode);
    auto rep = markov_check(p, part);
    EXPECT_TRUE(rep.all_finite) << to_string(mode);
    EXPECT_TRUE(rep.onto_union) << to_string(mode);
    EXPECT_LT(rep.max_endpoint_residual, 1e-9) << to_string(mode);
    EXPECT_EQ(rep.transitions.size(), rep.refined.size());
    for (const auto& o : rep.orbits) EXPECT_FALSE(o.budget_exceeded);
    EXPECT_TRUE(std::is_sorted(rep.refined.begin(), rep.refined.end()));
  }
}

INSTANTIATE_TEST_SUITE_P(SignatureSet, MarkovAllModes, ::testing::ValuesIn(signatures()),
                         [](const auto& info) {
                           std::string n;
                           for (char c : info.param) n += std::isdigit(static_cast<unsigned char>(c)) ? c : '_';
                           return n;
                         });

TEST(Markov, IdealOnlyPartitionUsesTheCuspOrbit) {
  const auto& p = polygon("1;;1");
  auto rep = markov_check(p, make_partition(p, partition_mode::midpoint));
  ASSERT_TRUE(rep.passed());
  EXPECT_EQ(rep.refined.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(rep.refined[i], i * pi / 2, 1e-12);
}

TEST(Markov, TransitionsCoverContiguousIntervals) {
  const auto& p = polygon("0;2,3;1");
  auto rep = markov_check(p, make_partition(p, partition_mode::midpoint));
  ASSERT_TRUE(rep.passed());
  const int n = int(rep.refined.size());
  for (const auto& cover : rep.transitions) {
    ASSERT_FALSE(cover.empty());
    for (std::size_t i = 1; i < cover.size(); ++i) EXPECT_EQ(cover[i], (cover[i - 1] + 1) % n);
  }
}
