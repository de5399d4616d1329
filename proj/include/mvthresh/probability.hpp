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

/// @file probability.hpp
/// Expectations of probability-ready expressions and level probabilities.
///
/// A PRE converts one-to-one into its expectation: OR becomes +, AND becomes
/// *, and each literal X_k{A} becomes sum_{v in A} p_k(v).
#pragma once

#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mvthresh/distribution.hpp"
#include "mvthresh/errors.hpp"
#include "mvthresh/expression.hpp"
#include "mvthresh/oracle.hpp"
#include "mvthresh/pre.hpp"

namespace mvthresh {

enum class Perspective { kSuccess, kFailure };

std::string_view to_string(Perspective perspective);
/// "success" or "failure"; throws ParseError otherwise.
Perspective parse_perspective(std::string_view name);

template <typename Value>
Value literal_expectation(const MvLiteral& literal, const ComponentDistribution<Value>& d) {
  Value sum = 0;
  for (InstanceMask m = literal.instances; m != 0; m &= m - 1) {
    sum += d(literal.var, std::countr_zero(m));
  }
  return sum;
}

/// Throws NotPre when two terms overlap.
template <typename Value>
Value expectation_of_pre(const SopExpression& expression, const ComponentDistribution<Value>& d) {
  const PreVerdict verdict = is_pre(expression);
  if (!verdict.is_pre) throw NotPre("expression is not probability-ready: " + verdict.justification);
  Value total = 0;
  for (const auto& term : expression.terms) {
    Value product = 1;
    for (std::size_t k = 0; k < term.size() && product != 0; ++k) {
      product *= literal_expectation(term.literal(k), d);
    }
    total += product;
  }
  return total;
}

/// Vectors are indexed by level j = 0..M.
template <typename Value>
struct ProbabilityReport {
  std::vector<Value> at_least;  // P(S >= j)
  std::vector<Value> at_most;   // P(S <= j)
  std::vector<Value> exactly;   // P(S == j)
  Perspective perspective = Perspective::kSuccess;
  PreMethod method = PreMethod::kShelling;
  bool oracle_agrees = false;
};

namespace detail {

template <typename Value>
void check_against_oracle(const SystemSpec& spec, const ComponentDistribution<Value>& d,
                          std::uint64_t state_cap, ProbabilityReport<Value>& report) {
  const StateSpaceTable table = build_table(spec, state_cap);
  report.oracle_agrees = true;
  for (int j = 0; j <= spec.top_level(); ++j) {
    const Value expected = oracle_probability(table, d, LevelPredicate::exactly(j));
    if (!values_equal(expected, report.exactly[static_cast<std::size_t>(j)])) {
      report.oracle_agrees = false;
    }
  }
}

}  // namespace detail

/// E{S >= j} for j = M..1 from success PREs, then P(S == j) by differences.
template <typename Value>
ProbabilityReport<Value> level_probabilities_success(const SystemSpec& spec,
                                                     const ComponentDistribution<Value>& d,
                                                     PreMethod method,
                                                     std::uint64_t state_cap = kDefaultStateCap) {
  validate_distribution(spec, d);
  const auto levels = static_cast<std::size_t>(spec.top_level()) + 1;
  ProbabilityReport<Value> report;
  report.perspective = Perspective::kSuccess;
  report.method = method;
  report.at_least.assign(levels, Value(0));
  report.at_most.assign(levels, Value(0));
  report.exactly.assign(levels, Value(0));

  report.at_least[0] = 1;
  for (std::size_t j = levels - 1; j >= 1; --j) {
    const auto pre = probability_ready(spec, LevelPredicate::at_least(static_cast<int>(j)), method, state_cap);
    report.at_least[j] = expectation_of_pre(pre, d);
  }
  for (std::size_t j = 0; j < levels; ++j) {
    const Value above = j + 1 < levels ? report.at_least[j + 1] : Value(0);
    report.exactly[j] = report.at_least[j] - above;
    report.at_most[j] = Value(1) - above;
  }
  detail::check_against_oracle(spec, d, state_cap, report);
  return report;
}

/// E{S <= j} for j = 0..M-1 from failure PREs, then P(S == j) by differences.
template <typename Value>
ProbabilityReport<Value> level_probabilities_failure(const SystemSpec& spec,
                                                     const ComponentDistribution<Value>& d,
                                                     PreMethod method,
                                                     std::uint64_t state_cap = kDefaultStateCap) {
  validate_distribution(spec, d);
  const auto levels = static_cast<std::size_t>(spec.top_level()) + 1;
  ProbabilityReport<Value> report;
  report.perspective = Perspective::kFailure;
  report.method = method;
  report.at_least.assign(levels, Value(0));
  report.at_most.assign(levels, Value(0));
  report.exactly.assign(levels, Value(0));

  report.at_most[levels - 1] = 1;
  for (std::size_t j = 0; j + 1 < levels; ++j) {
    const auto pre = probability_ready(spec, LevelPredicate::below(static_cast<int>(j) + 1), method, state_cap);
    report.at_most[j] = expectation_of_pre(pre, d);
  }
  for (std::size_t j = 0; j < levels; ++j) {
    const Value below = j > 0 ? report.at_most[j - 1] : Value(0);
    report.exactly[j] = report.at_most[j] - below;
    report.at_least[j] = Value(1) - below;
  }
  detail::check_against_oracle(spec, d, state_cap, report);
  return report;
}

}  // namespace mvthresh
