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

/// @file system.hpp
/// Truly-threshold multi-state system definition and its structure function.
///
/// A system of n components, component k taking states 0..m_k, is at level j
/// or above exactly when the weighted sum of component states reaches the
/// threshold T_j. Thresholds start at 0 and increase strictly; the level-M
/// range is closed by an implicit sentinel (sum of W_k * m_k) + 1.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvthresh/rational.hpp"

namespace mvthresh {

/// Default bound on exhaustively scanned state spaces.
inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;

/// Largest per-component state supported (instance sets are 64-bit masks).
inline constexpr int kMaxComponentState = 63;

/// One assignment (X_1, ..., X_n). Ordered lexicographically.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<int> values) : values_(std::move(values)) {}
  StateVector(std::initializer_list<int> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t k) const { return values_[k]; }
  int& operator[](std::size_t k) { return values_[k]; }
  const std::vector<int>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  auto operator<=>(const StateVector&) const = default;

 private:
  std::vector<int> values_;
};

/// Componentwise a <= b.
bool componentwise_leq(const StateVector& a, const StateVector& b);

/// "(1,2,2,2)"
std::string to_string(const StateVector& x);

/// Mixed-radix enumeration of {0..m_1} x ... x {0..m_n}, X_1 most significant.
class StateSpace {
 public:
  StateSpace() = default;
  explicit StateSpace(std::vector<int> max_states);

  /// Number of states; saturates at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  std::size_t dimension() const { return max_states_.size(); }
  const std::vector<int>& max_states() const { return max_states_; }

  /// Throws StateSpaceTooLarge when size() > cap.
  void require_within(std::uint64_t cap) const;

  bool contains(const StateVector& x) const;
  std::uint64_t index_of(const StateVector& x) const;
  StateVector at(std::uint64_t index) const;

  StateVector first() const { return StateVector(std::vector<int>(max_states_.size(), 0)); }
  StateVector last() const { return StateVector(max_states_); }

  /// Advances x to its lexicographic successor; false when x was the last.
  bool next(StateVector& x) const;

 private:
  std::vector<int> max_states_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 0;
};

enum class ViolationKind {
  kNoComponents,
  kSizeMismatch,
  kInvalidMaxState,
  kMaxStateTooLarge,
  kNegativeWeight,
  kAllZeroWeights,
  kTooFewThresholds,
  kNonZeroBaseThreshold,
  kNonIncreasingThresholds,
  kUnreachableTopLevel,
  kArithmeticOverflow,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// Checks the raw ingredients of a system definition.
ValidationResult validate_spec(std::span<const int> max_states,
                               std::span<const Rational> weights,
                               std::span<const Rational> thresholds);

/// A validated truly-threshold system. Immutable once constructed.
class SystemSpec {
 public:
  /// Throws InvalidSpecError listing every violation.
  static SystemSpec create(std::vector<int> max_states,
                           std::vector<Rational> weights,
                           std::vector<Rational> thresholds);

  std::size_t component_count() const { return max_states_.size(); }
  int max_state(std::size_t k) const { return max_states_[k]; }
  const std::vector<int>& max_states() const { return max_states_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<Rational>& thresholds() const { return thresholds_; }

  /// M, the highest system level.
  int top_level() const { return static_cast<int>(thresholds_.size()) - 1; }
  /// Implicit T_{M+1}.
  Rational sentinel_top() const;
  const StateSpace& state_space() const { return space_; }

  // Integer image of the weighted-sum arithmetic: every weight and threshold
  // multiplied by the lcm of their denominators.
  std::int64_t scaled_weight(std::size_t k) const { return scaled_weights_[k]; }
  /// j in 0..M+1; j == M+1 is the sentinel.
  std::int64_t scaled_threshold(int j) const { return scaled_thresholds_[static_cast<std::size_t>(j)]; }
  const Rational& scale() const { return scale_; }

  /// Unchecked: x must lie in the state space.
  std::int64_t scaled_sum(const StateVector& x) const;
  int level_of_scaled_sum(std::int64_t sum) const;
  Rational weighted_sum(const StateVector& x) const;

 private:
  SystemSpec() = default;

  std::vector<int> max_states_;
  std::vector<Rational> weights_;
  std::vector<Rational> thresholds_;
  Rational scale_;
  std::vector<std::int64_t> scaled_weights_;
  std::vector<std::int64_t> scaled_thresholds_;  // T_0..T_M, sentinel
  StateSpace space_;
};

/// The unique j with T_j <= sum < T_{j+1}. Throws StateOutOfRange.
int evaluate_structure(const SystemSpec& spec, const StateVector& x);

/// S{>=j}(x). Throws LevelOutOfRange for j outside 0..M.
bool level_success(const SystemSpec& spec, const StateVector& x, int j);

/// Binary level-set selector: S >= j, S < j, or S == j.
struct LevelPredicate {
  enum class Relation { kAtLeast, kBelow, kExactly };

  Relation relation = Relation::kAtLeast;
  int level = 0;

  static LevelPredicate at_least(int j) { return {Relation::kAtLeast, j}; }
  static LevelPredicate below(int j) { return {Relation::kBelow, j}; }
  static LevelPredicate exactly(int j) { return {Relation::kExactly, j}; }

  bool holds(int system_level) const;
  bool operator==(const LevelPredicate&) const = default;
};

/// "S >= 3", "S <= 1", "S == 2"
std::string to_string(const LevelPredicate& predicate);

enum class CoherenceProperty { kCausality, kMonotonicity, kRelevancy };

/// Counterexample to one coherence property. For monotonicity the state is
/// the vector whose increment in `component` lowers S; for a causality
/// failure it is the all-0 or all-m vector. Irrelevant components carry no
/// state (the claim is universal over the state space).
struct CoherenceWitness {
  CoherenceProperty property;
  std::optional<std::size_t> component;
  StateVector state;
};

struct CoherenceReport {
  bool causal = false;
  bool monotone = false;
  std::vector<bool> relevant;
  std::vector<CoherenceWitness> witnesses;
  /// First state x (lexicographic) where raising X_k raises S, per component.
  std::vector<std::optional<StateVector>> relevancy_witnesses;

  bool coherent() const;
};

CoherenceReport check_coherence(const SystemSpec& spec,
                                std::uint64_t state_cap = kDefaultStateCap);

struct SymmetryReport {
  bool symmetric = true;
  std::optional<std::pair<std::size_t, std::size_t>> asymmetric_pair;
  /// State where swapping the pair changes S; empty when m_i != m_j.
  std::optional<StateVector> witness;
};

/// Pairwise swap test over every pair of components.
SymmetryReport check_total_symmetry(const SystemSpec& spec,
                                    std::uint64_t state_cap = kDefaultStateCap);

}  // namespace mvthresh
