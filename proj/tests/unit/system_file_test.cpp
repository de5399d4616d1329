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

#include <string>

#include "mvthresh/errors.hpp"
#include "mvthresh/system_file.hpp"
#include "test_support.hpp"

namespace mvthresh {
namespace {

std::string parse_error_of(const std::string& text) {
  try {
    parse_system_definition(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(SystemFileTest, LoadsRunningExampleFixture) {
  const auto def = load_system_definition(testing::source_path("data/running_example.json"));
  EXPECT_EQ(def.name, "four-engine aircraft");
  ASSERT_EQ(def.components.size(), 4u);
  EXPECT_EQ(def.components[0].label, "engine 1");
  EXPECT_EQ(def.thresholds, (std::vector<Rational>{0, 2, 4, 6}));
  EXPECT_EQ(def.sentinel, Rational(9));
  EXPECT_EQ(def.component_state_labels.size(), 3u);
  EXPECT_EQ(def.system_state_labels.back(), "normal landing");
  EXPECT_TRUE(def.validate().ok());

  const auto spec = def.to_spec();
  EXPECT_EQ(spec.max_states(), (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(spec.top_level(), 3);
  const auto d = def.distribution();
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ((*d)(3, 2), Rational(1, 3));
}

TEST(SystemFileTest, AcceptsRationalAndDecimalNumbers) {
  const auto def = parse_system_definition(R"({
    "components": [{"max_state": 1, "weight": "1/3"}, {"max_state": 3, "weight": 0.25}],
    "thresholds": [0, "1/2", 1]
  })");
  EXPECT_EQ(def.components[0].weight, Rational(1, 3));
  EXPECT_EQ(def.components[1].weight, Rational(1, 4));
  EXPECT_EQ(def.thresholds[1], Rational(1, 2));
  EXPECT_FALSE(def.distribution().has_value());
  EXPECT_FALSE(def.sentinel.has_value());
}

TEST(SystemFileTest, MissingThresholdsIsAParseError) {
  const auto message = parse_error_of(R"({"components": [{"max_state": 1, "weight": 1}]})");
  EXPECT_NE(message.find("missing required key \"thresholds\""), std::string::npos) << message;
}

TEST(SystemFileTest, ReportsSchemaPaths) {
  EXPECT_NE(parse_error_of(R"({"components": [{"max_state": 1}], "thresholds": [0, 1]})")
                .find("$.components[0]"),
            std::string::npos);
  EXPECT_NE(parse_error_of(R"({"components": [], "thresholds": [0, 1], "extra": 1})")
                .find("unknown key \"extra\""),
            std::string::npos);
  EXPECT_NE(parse_error_of(R"({"components": [{"max_state": 1, "weight": "1/0"}], "thresholds": [0]})")
                .find("$.components[0].weight"),
            std::string::npos);
  EXPECT_NE(parse_error_of(R"({"components": [{"max_state": -1, "weight": 1}], "thresholds": [0]})")
                .find("$.components[0].max_state"),
            std::string::npos);
  EXPECT_NE(parse_error_of("[1, 2]").find("top level must be an object"), std::string::npos);
}

TEST(SystemFileTest, SyntaxErrorsCarryLineAndColumn) {
  const auto message = parse_error_of("{\n  \"components\": [\n    {\"max_state\": 1,}\n  ]\n}");
  EXPECT_NE(message.find("line 3"), std::string::npos) << message;
}

TEST(SystemFileTest, ValidationIsSeparateFromParsing) {
  const auto def = parse_system_definition(R"({
    "components": [{"max_state": 2, "weight": 1}, {"max_state": 2, "weight": 1}],
    "thresholds": [0, 4, 2]
  })");
  EXPECT_TRUE(def.validate().has(ViolationKind::kNonIncreasingThresholds));
  EXPECT_THROW(def.to_spec(), InvalidSpecError);
}

TEST(SystemFileTest, PartialProbabilitiesAreRejected) {
  const auto def = parse_system_definition(R"({
    "components": [{"max_state": 1, "weight": 1, "probs": [0.5, 0.5]}, {"max_state": 1, "weight": 1}],
    "thresholds": [0, 1]
  })");
  EXPECT_THROW(def.distribution(), ParseError);
}

TEST(SystemFileTest, MissingFile) {
  EXPECT_THROW(load_system_definition("/nonexistent/system.json"), ParseError);
}

}  // namespace
}  // namespace mvthresh
