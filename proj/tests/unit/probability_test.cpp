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

#include <random>
#include <vector>

#include "mvthresh/errors.hpp"
#include "mvthresh/probability.hpp"
#include "reference_expressions.hpp"
#include "test_support.hpp"

namespace mvthresh {
namespace {

using testing::parse_expression;
using testing::running_example;

TEST(ExpectationTest, PublishedCoversUnderUniformMasses) {
  const auto spec = running_example();
  const auto d = uniform_distribution<Rational>(spec);
  EXPECT_EQ(expectation_of_pre(parse_expression(testing::kLevel3SuccessDisjointA, spec,
                                                LevelPredicate::at_least(3)),
                               d),
            Rational(15, 81));
  EXPECT_EQ(expectation_of_pre(parse_expression(testing::kLevel1SuccessDisjoint, spec,
                                                LevelPredicate::at_least(1)),
                               d),
            Rational(76, 81));
}

TEST(ExpectationTest, LiteralExpectationSumsInstanceMasses) {
  const auto spec = running_example();
  ExactDistribution d{{{Rational(1, 2), Rational(1, 3), Rational(1, 6)},
                       {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  EXPECT_EQ(literal_expectation(MvLiteral{0, 0b110}, d), Rational(1, 2));
  EXPECT_EQ(literal_expectation(MvLiteral{0, 0b111}, d), Rational(1));
  EXPECT_EQ(literal_expectation(MvLiteral{0, 0}, d), Rational(0));
  EXPECT_EQ(literal_expectation(MvLiteral{2, 0b010}, d), Rational(1));
}

TEST(ExpectationTest, DegenerateAtTopStateSucceedsAtEveryLevel) {
  const auto spec = running_example();
  const auto d = degenerate_distribution<Rational>(spec, spec.state_space().last());
  for (auto method : {PreMethod::kShelling, PreMethod::kReflection, PreMethod::kExpansion}) {
    EXPECT_EQ(expectation_of_pre(probability_ready(spec, LevelPredicate::at_least(3), method), d),
              Rational(1));
  }
}

TEST(ExpectationTest, RejectsOverlappingExpressions) {
  const auto spec = running_example();
  const auto e = parse_expression(testing::kLevel3SuccessMinimal, spec, LevelPredicate::at_least(3),
                                  ExpressionForm::kMinimal);
  EXPECT_THROW(expectation_of_pre(e, uniform_distribution<Rational>(spec)), NotPre);
}

TEST(LevelProbabilitiesTest, UniformSuccessPerspective) {
  const auto spec = running_example();
  const auto r = level_probabilities_success(spec, uniform_distribution<Rational>(spec),
                                             PreMethod::kShelling);
  EXPECT_EQ(r.exactly, (std::vector<Rational>{Rational(5, 81), Rational(26, 81), Rational(35, 81),
                                              Rational(15, 81)}));
  EXPECT_EQ(r.at_least[2], Rational(50, 81));
  EXPECT_TRUE(r.oracle_agrees);
  Rational total = 0;
  for (const auto& p : r.exactly) total += p;
  EXPECT_EQ(total, Rational(1));
}

TEST(LevelProbabilitiesTest, UniformFailurePerspective) {
  const auto spec = running_example();
  const auto r = level_probabilities_failure(spec, uniform_distribution<Rational>(spec),
                                             PreMethod::kShelling);
  EXPECT_EQ(r.at_most[0], Rational(5, 81));
  EXPECT_EQ(r.at_most[1], Rational(31, 81));
  EXPECT_EQ(r.at_most[2], Rational(66, 81));
  EXPECT_EQ(r.at_most[3], Rational(1));
  EXPECT_TRUE(r.oracle_agrees);
}

TEST(LevelProbabilitiesTest, PerspectivesAndMethodsAgreeExactly) {
  const auto spec = running_example();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto d = testing::random_distribution(rng, spec);
    const auto base = level_probabilities_success(spec, d, PreMethod::kShelling);
    for (auto method : {PreMethod::kShelling, PreMethod::kReflection, PreMethod::kExpansion}) {
      EXPECT_EQ(level_probabilities_success(spec, d, method).exactly, base.exactly);
      const auto failure = level_probabilities_failure(spec, d, method);
      EXPECT_EQ(failure.exactly, base.exactly);
      EXPECT_EQ(failure.at_least, base.at_least);
      EXPECT_TRUE(failure.oracle_agrees);
    }
  }
}

TEST(LevelProbabilitiesTest, DegenerateDistributions) {
  const auto spec = running_example();
  const auto low = level_probabilities_success(
      spec, degenerate_distribution<Rational>(spec, spec.state_space().first()), PreMethod::kShelling);
  EXPECT_EQ(low.exactly[0], Rational(1));
  const auto high = level_probabilities_failure(
      spec, degenerate_distribution<Rational>(spec, spec.state_space().last()), PreMethod::kShelling);
  EXPECT_EQ(high.at_most[2], Rational(0));
}

TEST(LevelProbabilitiesTest, FloatModeWithinTolerance) {
  const auto spec = running_example();
  const auto r = level_probabilities_success(spec, uniform_distribution<double>(spec),
                                             PreMethod::kExpansion);
  EXPECT_TRUE(r.oracle_agrees);
  const double expected[] = {5.0 / 81, 26.0 / 81, 35.0 / 81, 15.0 / 81};
  for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(r.exactly[j], expected[j], kFloatTolerance);
}

TEST(LevelProbabilitiesTest, InvalidDistributionsAreRejected) {
  const auto spec = running_example();
  auto d = uniform_distribution<Rational>(spec);
  d.masses[1][0] = Rational(1, 2);
  EXPECT_THROW(level_probabilities_success(spec, d, PreMethod::kShelling), ParseError);
  d = uniform_distribution<Rational>(spec);
  d.masses.pop_back();
  EXPECT_THROW(level_probabilities_success(spec, d, PreMethod::kShelling), ParseError);
}

TEST(LevelProbabilitiesTest, StochasticDominanceRaisesSuccess) {
  // Shifting mass of one component upwards cannot lower P(S >= j).
  const auto spec = running_example();
  auto d = uniform_distribution<Rational>(spec);
  const auto before = level_probabilities_success(spec, d, PreMethod::kShelling);
  d.masses[2] = {Rational(1, 6), Rational(1, 3), Rational(1, 2)};
  const auto after = level_probabilities_success(spec, d, PreMethod::kShelling);
  for (std::size_t j = 0; j < before.at_least.size(); ++j) {
    EXPECT_GE(after.at_least[j], before.at_least[j]) << j;
  }
  EXPECT_GT(after.at_least[3], before.at_least[3]);
}

TEST(PerspectiveTest, Names) {
  EXPECT_EQ(parse_perspective("success"), Perspective::kSuccess);
  EXPECT_EQ(parse_perspective(to_string(Perspective::kFailure)), Perspective::kFailure);
  EXPECT_THROW(parse_perspective("both ways"), ParseError);
}

}  // namespace
}  // namespace mvthresh
