// Copyright 2026 The mvthresh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "mvthresh/errors.hpp"
#include "mvthresh/oracle.hpp"
#include "reference_expressions.hpp"
#include "test_support.hpp"

namespace mvthresh {
namespace {

using testing::running_example;

TEST(BuildTableTest, RunningExampleLevelCounts) {
  const auto spec = running_example();
  const auto table = build_table(spec);
  EXPECT_EQ(table.size(), 81u);
  EXPECT_EQ(table.level_counts(), (std::vector<std::uint64_t>{5, 26, 35, 15}));
  EXPECT_EQ(table.level_counts(),
            testing::polynomial_level_counts({2, 2, 2, 2}, {1, 1, 1, 1}, {0, 2, 4, 6}));
  EXPECT_EQ(testing::sum_polynomial({2, 2, 2, 2}, {1, 1, 1, 1}),
            (std::vector<std::uint64_t>{1, 4, 10, 16, 19, 16, 10, 4, 1}));
  EXPECT_EQ(table.count(LevelPredicate::at_least(2)), 50u);
  EXPECT_EQ(table.count(LevelPredicate::below(3)), 66u);
  EXPECT_EQ(table.state(80), (StateVector{2, 2, 2, 2}));
  EXPECT_EQ(table.level(80), 3);
  EXPECT_EQ(table.weighted_sum(80), Rational(8));
}

TEST(BuildTableTest, SingleBinaryComponent) {
  const auto spec = SystemSpec::create({1}, {1}, {0, 1});
  const auto table = build_table(spec);
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(table.level_counts(), (std::vector<std::uint64_t>{1, 1}));
}

TEST(BuildTableTest, RespectsStateCap) {
  EXPECT_THROW(build_table(running_example(), 80), StateSpaceTooLarge);
}

TEST(OracleProbabilityTest, Examples) {
  const auto spec = running_example();
  const auto table = build_table(spec);
  EXPECT_EQ(oracle_probability(table, uniform_distribution<Rational>(spec), LevelPredicate::at_least(2)),
            Rational(50, 81));
  EXPECT_EQ(oracle_probability(table, degenerate_distribution<Rational>(spec, {1, 2, 1, 2}),
                               LevelPredicate::at_least(3)),
            Rational(1));
  EXPECT_EQ(oracle_probability(table, uniform_distribution<Rational>(spec), LevelPredicate::below(0)),
            Rational(0));
}

TEST(AssertEquivalentTest, PublishedCovers) {
  const auto spec = running_example();
  const auto table = build_table(spec);
  EXPECT_TRUE(assert_equivalent(table,
                                testing::parse_expression(testing::kLevel2SuccessDisjoint, spec,
                                                          LevelPredicate::at_least(2)),
                                LevelPredicate::at_least(2))
                  .equal);
  const auto e = testing::parse_expression(testing::kLevel3FailureDisjoint, spec, LevelPredicate::below(3));
  EXPECT_TRUE(assert_equivalent(table, e, LevelPredicate::below(3)).equal);
  EXPECT_EQ(denotation(e, spec).size(), 66u);

  const auto wrong = assert_equivalent(table, e, LevelPredicate::below(2));
  EXPECT_FALSE(wrong.equal);
  EXPECT_TRUE(wrong.missing.empty());
  EXPECT_EQ(wrong.extra.size(), 35u);
}

TEST(WriteCsvTest, HeaderAndRows) {
  const auto spec = SystemSpec::create({1, 2}, {Rational(1, 2), 1}, {0, 1});
  std::ostringstream out;
  write_csv(build_table(spec), out);
  EXPECT_EQ(out.str(),
            "x_1,x_2,weighted_sum,level\n"
            "0,0,0,0\n"
            "0,1,1,1\n"
            "0,2,2,1\n"
            "1,0,1/2,0\n"
            "1,1,3/2,1\n"
            "1,2,5/2,1\n");
}

}  // namespace
}  // namespace mvthresh
