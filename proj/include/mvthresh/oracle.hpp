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

/// @file oracle.hpp
/// Brute-force ground truth over the whole state space.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mvthresh/distribution.hpp"
#include "mvthresh/expression.hpp"
#include "mvthresh/system.hpp"

namespace mvthresh {

/// Weighted sum and level of every state, in lexicographic state order.
class StateSpaceTable {
 public:
  const SystemSpec& spec() const { return *spec_; }
  std::uint64_t size() const { return levels_.size(); }
  StateVector state(std::uint64_t i) const { return spec_->state_space().at(i); }
  int level(std::uint64_t i) const { return levels_[i]; }
  Rational weighted_sum(std::uint64_t i) const;
  /// Entry j counts the states at exactly level j.
  const std::vector<std::uint64_t>& level_counts() const { return level_counts_; }
  bool selected(std::uint64_t i, const LevelPredicate& predicate) const {
    return predicate.holds(levels_[i]);
  }
  std::uint64_t count(const LevelPredicate& predicate) const;

  friend StateSpaceTable build_table(const SystemSpec& spec, std::uint64_t state_cap);

 private:
  const SystemSpec* spec_ = nullptr;
  std::vector<std::int64_t> scaled_sums_;
  std::vector<int> levels_;
  std::vector<std::uint64_t> level_counts_;
};

/// Exhaustive evaluation. The table refers to `spec`, which must outlive it.
StateSpaceTable build_table(const SystemSpec& spec, std::uint64_t state_cap = kDefaultStateCap);

/// Sum over selected states of prod_k p_k(x_k).
template <typename Value>
Value oracle_probability(const StateSpaceTable& table, const ComponentDistribution<Value>& d,
                         const LevelPredicate& predicate) {
  Value total = 0;
  const StateSpace& space = table.spec().state_space();
  StateVector x = space.first();
  std::uint64_t i = 0;
  do {
    if (table.selected(i, predicate)) {
      Value p = 1;
      for (std::size_t k = 0; k < x.size() && p != 0; ++k) p *= d(k, x[k]);
      total += p;
    }
    ++i;
  } while (space.next(x));
  return total;
}

struct EquivalenceVerdict {
  bool equal = true;
  /// Selected states the expression misses.
  std::vector<StateVector> missing;
  /// States the expression covers outside the selection.
  std::vector<StateVector> extra;
};

/// Compares the expression's denotation with the selected level set.
EquivalenceVerdict assert_equivalent(const StateSpaceTable& table, const SopExpression& expression,
                                     const LevelPredicate& predicate);

/// Columns x_1..x_n, weighted_sum, level.
void write_csv(const StateSpaceTable& table, std::ostream& out);

}  // namespace mvthresh
