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

#include "mvthresh/oracle.hpp"

#include <ostream>

namespace mvthresh {

Rational StateSpaceTable::weighted_sum(std::uint64_t i) const {
  return Rational(scaled_sums_[i]) / spec_->scale();
}

std::uint64_t StateSpaceTable::count(const LevelPredicate& predicate) const {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < level_counts_.size(); ++j) {
    if (predicate.holds(static_cast<int>(j))) total += level_counts_[j];
  }
  return total;
}

StateSpaceTable build_table(const SystemSpec& spec, std::uint64_t state_cap) {
  const StateSpace& space = spec.state_space();
  space.require_within(state_cap);
  StateSpaceTable table;
  table.spec_ = &spec;
  table.scaled_sums_.reserve(space.size());
  table.levels_.reserve(space.size());
  table.level_counts_.assign(static_cast<std::size_t>(spec.top_level()) + 1, 0);
  StateVector x = space.first();
  do {
    const std::int64_t sum = spec.scaled_sum(x);
    const int level = evaluate_structure(spec, x);
    table.scaled_sums_.push_back(sum);
    table.levels_.push_back(level);
    ++table.level_counts_[static_cast<std::size_t>(level)];
  } while (space.next(x));
  return table;
}

EquivalenceVerdict assert_equivalent(const StateSpaceTable& table, const SopExpression& expression,
                                     const LevelPredicate& predicate) {
  const std::vector<bool> covered = denotation_mask(expression, table.spec(), table.size());
  EquivalenceVerdict verdict;
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    const bool want = table.selected(i, predicate);
    if (want && !covered[i]) verdict.missing.push_back(table.state(i));
    if (!want && covered[i]) verdict.extra.push_back(table.state(i));
  }
  verdict.equal = verdict.missing.empty() && verdict.extra.empty();
  return verdict;
}

void write_csv(const StateSpaceTable& table, std::ostream& out) {
  const std::size_t n = table.spec().component_count();
  for (std::size_t k = 0; k < n; ++k) out << "x_" << k + 1 << ',';
  out << "weighted_sum,level\n";
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    const StateVector x = table.state(i);
    for (int v : x) out << v << ',';
    out << to_string(table.weighted_sum(i)) << ',' << table.level(i) << '\n';
  }
}

}  // namespace mvthresh
