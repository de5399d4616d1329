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

/// @file distribution.hpp
/// Per-component state probabilities, exact or floating point.
#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>
#include <vector>

#include "mvthresh/errors.hpp"
#include "mvthresh/rational.hpp"
#include "mvthresh/system.hpp"

namespace mvthresh {

/// masses[k][v] = P(X_k = v). Value is Rational or double.
template <typename Value>
struct ComponentDistribution {
  std::vector<std::vector<Value>> masses;

  const Value& operator()(std::size_t k, int v) const { return masses[k][static_cast<std::size_t>(v)]; }
};

using ExactDistribution = ComponentDistribution<Rational>;
using FloatDistribution = ComponentDistribution<double>;

/// Absolute tolerance used whenever floating-point results are compared.
inline constexpr double kFloatTolerance = 1e-12;

template <typename Value>
bool values_equal(const Value& a, const Value& b) {
  if constexpr (std::is_floating_point_v<Value>) {
    return std::abs(a - b) <= kFloatTolerance;
  } else {
    return a == b;
  }
}

template <typename Value>
std::string value_to_string(const Value& v) {
  if constexpr (std::is_floating_point_v<Value>) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  } else {
    return to_string(v);
  }
}

/// Throws ParseError when shapes do not match the spec, a mass is negative,
/// or a component's masses do not sum to 1 (exactly, or within 1e-12).
template <typename Value>
void validate_distribution(const SystemSpec& spec, const ComponentDistribution<Value>& d) {
  if (d.masses.size() != spec.component_count()) {
    throw ParseError("distribution has " + std::to_string(d.masses.size()) +
                     " components, system has " + std::to_string(spec.component_count()));
  }
  for (std::size_t k = 0; k < d.masses.size(); ++k) {
    const auto& row = d.masses[k];
    const std::string who = "component " + std::to_string(k + 1);
    if (row.size() != static_cast<std::size_t>(spec.max_state(k)) + 1) {
      throw ParseError(who + " has " + std::to_string(row.size()) + " probabilities, expected " +
                       std::to_string(spec.max_state(k) + 1));
    }
    Value total = 0;
    for (const auto& p : row) {
      if (p < 0) throw ParseError(who + " has a negative probability");
      total += p;
    }
    if (!values_equal<Value>(total, Value(1))) {
      throw ParseError(who + " probabilities sum to " + value_to_string(total) + ", not 1");
    }
  }
}

template <typename Value>
ComponentDistribution<Value> uniform_distribution(const SystemSpec& spec) {
  ComponentDistribution<Value> d;
  for (int m : spec.max_states()) {
    d.masses.emplace_back(static_cast<std::size_t>(m) + 1, Value(1) / Value(m + 1));
  }
  return d;
}

/// All mass on the given state vector.
template <typename Value>
ComponentDistribution<Value> degenerate_distribution(const SystemSpec& spec, const StateVector& at) {
  ComponentDistribution<Value> d;
  for (std::size_t k = 0; k < spec.component_count(); ++k) {
    d.masses.emplace_back(static_cast<std::size_t>(spec.max_state(k)) + 1, Value(0));
    d.masses.back()[static_cast<std::size_t>(at[k])] = Value(1);
  }
  return d;
}

inline FloatDistribution to_float(const ExactDistribution& d) {
  FloatDistribution out;
  for (const auto& row : d.masses) {
    auto& r = out.masses.emplace_back();
    for (const auto& p : row) r.push_back(static_cast<double>(p));
  }
  return out;
}

}  // namespace mvthresh
