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

/// @file pre.hpp
/// Probability-ready expressions (PREs): sums of mutually disjoint products.
///
/// Three independent constructions are offered:
///  - shelling: reorder the prime implicants so that each one, minus the
///    union of its predecessors, is still a single product term;
///  - reflection: A v B = A v (A/C)'B with the disjoint De Morgan expansion
///    of (A/C)';
///  - Boole-Shannon: expansion about the orthonormal instances of each
///    component in turn.
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mvthresh/expression.hpp"
#include "mvthresh/system.hpp"

namespace mvthresh {

enum class PreMethod { kShelling, kReflection, kExpansion };

std::string_view to_string(PreMethod method);
/// "shelling", "reflection" or "expansion"; throws ParseError otherwise.
PreMethod parse_pre_method(std::string_view name);

struct ShellingResult {
  SopExpression expression;  // disjoint
  bool shellable = false;
  /// Input term index for each output term (valid when shellable).
  std::vector<std::size_t> order;
  /// Which ordering succeeded: "cell-count", "fewest-literals",
  /// "backtracking", "greedy", or "reflection-fallback".
  std::string strategy;
};

/// Residual cover(term) minus the union of `earlier`, as a product term, or
/// nullopt when the residual is empty or not a single subcube.
std::optional<ProductTerm> subcube_residual(const ProductTerm& term,
                                            std::span<const ProductTerm> earlier,
                                            const SystemSpec& spec);

/// Finds a shelling of the (minimal) expression's terms. Falls back to
/// disjoint_via_reflection when none is found.
ShellingResult shellable_disjoint_cover(const SopExpression& minimal, const SystemSpec& spec);

/// Sequential disjointing by the Reflection Law. Terms are pre-sorted by
/// ascending number of constrained literals and subsumed terms are dropped.
SopExpression disjoint_via_reflection(const SopExpression& expression, const SystemSpec& spec);

struct ExpansionOptions {
  /// Merge terms that differ only in one component's instance set.
  bool merge = true;
};

/// Multi-valued Boole-Shannon expansion of the level indicator, expanding
/// about X_1, X_2, ... and stopping at constant sub-functions.
SopExpression boole_shannon_pre(const SystemSpec& spec, const LevelPredicate& predicate,
                                const ExpansionOptions& options = {},
                                std::uint64_t state_cap = kDefaultStateCap);

/// Minimal SOP of the level function: from MUVs for S >= j, from MLVs for
/// S < j. Constant functions give the empty expression or the universe term.
SopExpression minimal_sop(const SystemSpec& spec, const LevelPredicate& predicate,
                          std::uint64_t state_cap = kDefaultStateCap);

/// Disjoint product of two PREs (pairwise intersections, empty ones dropped).
SopExpression conjoin_disjoint(const SopExpression& a, const SopExpression& b,
                               const LevelPredicate& predicate);

/// PRE for S >= j or S < j by the chosen method. For S == j see
/// instance_expression.
SopExpression probability_ready(const SystemSpec& spec, const LevelPredicate& predicate,
                                PreMethod method, std::uint64_t state_cap = kDefaultStateCap);

/// PRE for S == j as PRE(S >= j) AND PRE(S < j+1).
SopExpression instance_expression(const SystemSpec& spec, int j,
                                  PreMethod method = PreMethod::kShelling,
                                  std::uint64_t state_cap = kDefaultStateCap);

}  // namespace mvthresh
