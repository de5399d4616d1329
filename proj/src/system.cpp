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

#include "mvthresh/system.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mvthresh/errors.hpp"

namespace mvthresh {

bool componentwise_leq(const StateVector& a, const StateVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

std::string to_string(const StateVector& x) {
  std::string out = "(";
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(x[k]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// StateSpace

StateSpace::StateSpace(std::vector<int> max_states)
    : max_states_(std::move(max_states)), strides_(max_states_.size(), 1) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  size_ = 1;
  for (std::size_t k = max_states_.size(); k-- > 0;) {
    strides_[k] = size_;
    auto radix = static_cast<std::uint64_t>(max_states_[k]) + 1;
    size_ = size_ > kMax / radix ? kMax : size_ * radix;
  }
}

void StateSpace::require_within(std::uint64_t cap) const {
  if (size_ > cap) throw StateSpaceTooLarge(size_, cap);
}

bool StateSpace::contains(const StateVector& x) const {
  if (x.size() != max_states_.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < 0 || x[k] > max_states_[k]) return false;
  }
  return true;
}

std::uint64_t StateSpace::index_of(const StateVector& x) const {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    index += strides_[k] * static_cast<std::uint64_t>(x[k]);
  }
  return index;
}

StateVector StateSpace::at(std::uint64_t index) const {
  std::vector<int> values(max_states_.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = static_cast<int>(index / strides_[k]);
    index %= strides_[k];
  }
  return StateVector(std::move(values));
}

bool StateSpace::next(StateVector& x) const {
  for (std::size_t k = x.size(); k-- > 0;) {
    if (x[k] < max_states_[k]) {
      ++x[k];
      return true;
    }
    x[k] = 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNoComponents: return "NoComponents";
    case ViolationKind::kSizeMismatch: return "SizeMismatch";
    case ViolationKind::kInvalidMaxState: return "InvalidMaxState";
    case ViolationKind::kMaxStateTooLarge: return "MaxStateTooLarge";
    case ViolationKind::kNegativeWeight: return "NegativeWeight";
    case ViolationKind::kAllZeroWeights: return "AllZeroWeights";
    case ViolationKind::kTooFewThresholds: return "TooFewThresholds";
    case ViolationKind::kNonZeroBaseThreshold: return "NonZeroBaseThreshold";
    case ViolationKind::kNonIncreasingThresholds: return "NonIncreasingThresholds";
    case ViolationKind::kUnreachableTopLevel: return "UnreachableTopLevel";
    case ViolationKind::kArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "Unknown";
}

bool ValidationResult::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

// Weights/thresholds times the lcm of their denominators. Empty when any
// scaled quantity would not fit comfortably in 64 bits.
struct ScaledArithmetic {
  Rational scale;
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> thresholds;  // with sentinel appended
};

std::optional<ScaledArithmetic> scale_to_integers(std::span<const int> max_states,
                                                  std::span<const Rational> weights,
                                                  std::span<const Rational> thresholds) {
  BigInt lcm = 1;
  auto absorb = [&lcm](const Rational& r) {
    BigInt d = denominator(r);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  };
  for (const auto& w : weights) absorb(w);
  for (const auto& t : thresholds) absorb(t);

  // Sums must stay well inside int64 so that sentinel arithmetic cannot wrap.
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4);
  ScaledArithmetic out;
  out.scale = Rational(lcm);
  BigInt top = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    Rational scaled = weights[k] * out.scale;
    BigInt w = numerator(scaled);
    if (w > limit) return std::nullopt;
    out.weights.push_back(static_cast<std::int64_t>(w));
    top += w * max_states[k];
  }
  BigInt sentinel = top + lcm;
  if (sentinel > limit) return std::nullopt;
  for (const auto& t : thresholds) {
    BigInt v = numerator(Rational(t * out.scale));
    if (v > limit || v < -limit) return std::nullopt;
    out.thresholds.push_back(static_cast<std::int64_t>(v));
  }
  out.thresholds.push_back(static_cast<std::int64_t>(sentinel));
  return out;
}

}  // namespace

ValidationResult validate_spec(std::span<const int> max_states,
                               std::span<const Rational> weights,
                               std::span<const Rational> thresholds) {
  ValidationResult result;
  auto add = [&result](ViolationKind kind, std::string message) {
    result.violations.push_back({kind, std::move(message)});
  };

  if (max_states.empty()) add(ViolationKind::kNoComponents, "system has no components");
  if (max_states.size() != weights.size()) {
    add(ViolationKind::kSizeMismatch,
        std::to_string(max_states.size()) + " components but " +
            std::to_string(weights.size()) + " weights");
  }
  for (std::size_t k = 0; k < max_states.size(); ++k) {
    if (max_states[k] < 1) {
      add(ViolationKind::kInvalidMaxState,
          "component " + std::to_string(k + 1) + " has max state " +
              std::to_string(max_states[k]) + " (must be >= 1)");
    } else if (max_states[k] > kMaxComponentState) {
      add(ViolationKind::kMaxStateTooLarge,
          "component " + std::to_string(k + 1) + " has max state " +
              std::to_string(max_states[k]) + " (at most " +
              std::to_string(kMaxComponentState) + " supported)");
    }
  }
  bool any_positive = false;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] < 0) {
      add(ViolationKind::kNegativeWeight,
          "weight W_" + std::to_string(k + 1) + " = " + to_string(weights[k]) + " is negative");
    }
    if (weights[k] > 0) any_positive = true;
  }
  if (!weights.empty() && !any_positive) add(ViolationKind::kAllZeroWeights, "all weights are zero");

  if (thresholds.size() < 2) {
    add(ViolationKind::kTooFewThresholds, "need thresholds T_0..T_M with M >= 1");
  }
  if (!thresholds.empty() && thresholds.front() != 0) {
    add(ViolationKind::kNonZeroBaseThreshold,
        "T_0 = " + to_string(thresholds.front()) + " (must be 0)");
  }
  for (std::size_t j = 1; j < thresholds.size(); ++j) {
    if (thresholds[j] <= thresholds[j - 1]) {
      add(ViolationKind::kNonIncreasingThresholds,
          "T_" + std::to_string(j) + " = " + to_string(thresholds[j]) + " does not exceed T_" +
              std::to_string(j - 1) + " = " + to_string(thresholds[j - 1]));
      break;
    }
  }

  // Remaining checks need consistent shapes.
  if (!result.ok() && (result.has(ViolationKind::kSizeMismatch) ||
                       result.has(ViolationKind::kNoComponents) ||
                       result.has(ViolationKind::kInvalidMaxState))) {
    return result;
  }
  if (!thresholds.empty()) {
    Rational top = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) top += weights[k] * max_states[k];
    if (thresholds.back() > top) {
      add(ViolationKind::kUnreachableTopLevel,
          "T_M = " + to_string(thresholds.back()) + " exceeds the largest weighted sum " +
              to_string(top));
    }
  }
  if (!scale_to_integers(max_states, weights, thresholds)) {
    add(ViolationKind::kArithmeticOverflow,
        "weights and thresholds do not fit 64-bit exact arithmetic after scaling");
  }
  return result;
}

// ---------------------------------------------------------------------------
// SystemSpec

SystemSpec SystemSpec::create(std::vector<int> max_states, std::vector<Rational> weights,
                              std::vector<Rational> thresholds) {
  ValidationResult check = validate_spec(max_states, weights, thresholds);
  if (!check.ok()) {
    std::string message = "invalid system definition:";
    for (const auto& v : check.violations) {
      message += "\n  ";
      message += to_string(v.kind);
      message += ": " + v.message;
    }
    throw InvalidSpecError(message);
  }
  auto scaled = scale_to_integers(max_states, weights, thresholds);
  SystemSpec spec;
  spec.max_states_ = std::move(max_states);
  spec.weights_ = std::move(weights);
  spec.thresholds_ = std::move(thresholds);
  spec.scale_ = scaled->scale;
  spec.scaled_weights_ = std::move(scaled->weights);
  spec.scaled_thresholds_ = std::move(scaled->thresholds);
  spec.space_ = StateSpace(spec.max_states_);
  return spec;
}

Rational SystemSpec::sentinel_top() const {
  return Rational(scaled_thresholds_.back()) / scale_;
}

std::int64_t SystemSpec::scaled_sum(const StateVector& x) const {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < x.size(); ++k) sum += scaled_weights_[k] * x[k];
  return sum;
}

int SystemSpec::level_of_scaled_sum(std::int64_t sum) const {
  auto first = scaled_thresholds_.begin();
  auto last = scaled_thresholds_.end() - 1;  // exclude sentinel
  return static_cast<int>(std::upper_bound(first, last, sum) - first) - 1;
}

Rational SystemSpec::weighted_sum(const StateVector& x) const {
  Rational sum = 0;
  for (std::size_t k = 0; k < x.size(); ++k) sum += weights_[k] * x[k];
  return sum;
}

int evaluate_structure(const SystemSpec& spec, const StateVector& x) {
  if (!spec.state_space().contains(x)) {
    throw StateOutOfRange("state " + to_string(x) + " lies outside the state space");
  }
  return spec.level_of_scaled_sum(spec.scaled_sum(x));
}

bool level_success(const SystemSpec& spec, const StateVector& x, int j) {
  if (j < 0 || j > spec.top_level()) {
    throw LevelOutOfRange("level " + std::to_string(j) + " outside 0.." +
                          std::to_string(spec.top_level()));
  }
  if (!spec.state_space().contains(x)) {
    throw StateOutOfRange("state " + to_string(x) + " lies outside the state space");
  }
  return spec.scaled_sum(x) >= spec.scaled_threshold(j);
}

bool LevelPredicate::holds(int system_level) const {
  switch (relation) {
    case Relation::kAtLeast: return system_level >= level;
    case Relation::kBelow: return system_level < level;
    case Relation::kExactly: return system_level == level;
  }
  return false;
}

std::string to_string(const LevelPredicate& predicate) {
  switch (predicate.relation) {
    case LevelPredicate::Relation::kAtLeast: return "S >= " + std::to_string(predicate.level);
    case LevelPredicate::Relation::kBelow: return "S <= " + std::to_string(predicate.level - 1);
    case LevelPredicate::Relation::kExactly: return "S == " + std::to_string(predicate.level);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Coherence and symmetry

bool CoherenceReport::coherent() const {
  return causal && monotone &&
         std::all_of(relevant.begin(), relevant.end(), [](bool r) { return r; });
}

CoherenceReport check_coherence(const SystemSpec& spec, std::uint64_t state_cap) {
  const StateSpace& space = spec.state_space();
  space.require_within(state_cap);
  const std::size_t n = spec.component_count();

  CoherenceReport report;
  report.relevant.assign(n, false);
  report.relevancy_witnesses.assign(n, std::nullopt);

  const int bottom = evaluate_structure(spec, space.first());
  const int top = evaluate_structure(spec, space.last());
  report.causal = bottom == 0 && top == spec.top_level();
  if (bottom != 0) report.witnesses.push_back({CoherenceProperty::kCausality, std::nullopt, space.first()});
  if (top != spec.top_level()) report.witnesses.push_back({CoherenceProperty::kCausality, std::nullopt, space.last()});

  report.monotone = true;
  StateVector x = space.first();
  do {
    const std::int64_t sum = spec.scaled_sum(x);
    const int level = spec.level_of_scaled_sum(sum);
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k] == spec.max_state(k)) continue;
      const int raised = spec.level_of_scaled_sum(sum + spec.scaled_weight(k));
      if (raised < level && report.monotone) {
        report.monotone = false;
        report.witnesses.push_back({CoherenceProperty::kMonotonicity, k, x});
      }
      if (raised > level && !report.relevant[k]) {
        report.relevant[k] = true;
        report.relevancy_witnesses[k] = x;
      }
    }
  } while (space.next(x));

  for (std::size_t k = 0; k < n; ++k) {
    if (!report.relevant[k]) report.witnesses.push_back({CoherenceProperty::kRelevancy, k, {}});
  }
  return report;
}

SymmetryReport check_total_symmetry(const SystemSpec& spec, std::uint64_t state_cap) {
  const StateSpace& space = spec.state_space();
  const std::size_t n = spec.component_count();
  SymmetryReport report;
  if (n < 2) return report;
  space.require_within(state_cap);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (spec.max_state(i) != spec.max_state(j)) {
        report.symmetric = false;
        report.asymmetric_pair = {i, j};
        return report;
      }
      StateVector x = space.first();
      do {
        if (x[i] == x[j]) continue;
        StateVector swapped = x;
        std::swap(swapped[i], swapped[j]);
        if (evaluate_structure(spec, x) != evaluate_structure(spec, swapped)) {
          report.symmetric = false;
          report.asymmetric_pair = {i, j};
          report.witness = x;
          return report;
        }
      } while (space.next(x));
    }
  }
  return report;
}

}  // namespace mvthresh
