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

/// @file expression.hpp
/// Multi-valued literals, product terms and sum-of-products expressions.
///
/// A literal X_k{A} is true when X_k takes a value in the instance set A,
/// stored as a bitmask over 0..m_k. A product term keeps one literal per
/// component; a component the term does not constrain carries the full set
/// (the constant-1 literal X_k{>=0}).
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvthresh/boundary.hpp"
#include "mvthresh/system.hpp"

namespace mvthresh {

using InstanceMask = std::uint64_t;

/// Mask {0..m}.
constexpr InstanceMask full_mask(int max_state) {
  return max_state >= 63 ? ~InstanceMask{0} : (InstanceMask{1} << (max_state + 1)) - 1;
}
/// Mask {j..m}, i.e. X{>=j}.
constexpr InstanceMask at_least_mask(int j, int max_state) {
  return full_mask(max_state) & ~(j <= 0 ? InstanceMask{0} : full_mask(j - 1));
}
/// Mask {0..j}, i.e. X{<=j}.
constexpr InstanceMask at_most_mask(int j) { return j < 0 ? 0 : full_mask(j); }
constexpr InstanceMask singleton_mask(int v) { return InstanceMask{1} << v; }

struct MvLiteral {
  std::size_t var = 0;
  InstanceMask instances = 0;

  bool operator==(const MvLiteral&) const = default;
};

/// Instance-set complement within 0..m_k.
MvLiteral complement(const MvLiteral& literal, int max_state);

class ProductTerm {
 public:
  ProductTerm() = default;
  explicit ProductTerm(std::vector<InstanceMask> masks) : masks_(std::move(masks)) {}

  /// Constant-1 term over the spec's components.
  static ProductTerm universe(const SystemSpec& spec);
  /// The single cell x.
  static ProductTerm cell(const StateVector& x);

  std::size_t size() const { return masks_.size(); }
  InstanceMask mask(std::size_t k) const { return masks_[k]; }
  void set_mask(std::size_t k, InstanceMask m) { masks_[k] = m; }
  const std::vector<InstanceMask>& masks() const { return masks_; }
  MvLiteral literal(std::size_t k) const { return {k, masks_[k]}; }

  /// Some instance set is empty: the term is the constant 0.
  bool is_empty() const;
  bool covers(const StateVector& x) const;
  /// Cover of *this is a subset of other's.
  bool subsumed_by(const ProductTerm& other) const;
  /// Number of literals that are not the constant 1 for `spec`.
  std::size_t constrained_literal_count(const SystemSpec& spec) const;

  bool operator==(const ProductTerm&) const = default;

 private:
  std::vector<InstanceMask> masks_;
};

/// Product of instance-set sizes: the number of cells the term covers.
std::uint64_t cell_count(const ProductTerm& term);

/// Literalwise intersection.
ProductTerm conjoin(const ProductTerm& a, const ProductTerm& b);

/// True iff some component has disjoint instance sets in a and b.
bool is_disjoint_pair(const ProductTerm& a, const ProductTerm& b);

enum class ExpressionForm { kMinimal, kDisjoint };

/// Disjunction of product terms representing one binary level function.
struct SopExpression {
  std::vector<ProductTerm> terms;
  LevelPredicate predicate;
  ExpressionForm form = ExpressionForm::kMinimal;

  std::size_t size() const { return terms.size(); }
};

/// One term per MUV v: AND_k X_k{>= v_k}. Represents S >= j.
SopExpression sop_from_muvs(const SystemSpec& spec, const BoundaryVectorSet& muvs);

/// One term per MLV v: AND_k X_k{<= v_k}. Represents S <= j, i.e. S < j+1.
SopExpression sop_from_mlvs(const SystemSpec& spec, const BoundaryVectorSet& mlvs);

struct PreVerdict {
  bool is_pre = true;
  /// First overlapping pair of term indices when not a PRE.
  std::optional<std::pair<std::size_t, std::size_t>> overlap;
  std::string justification;
};

/// Pairwise disjointness of all terms. Independence of ANDed factors holds
/// structurally: every factor is a literal of a distinct, independent
/// component.
PreVerdict is_pre(const SopExpression& expression);

/// Covered-cell indicator, indexed by StateSpace::index_of.
std::vector<bool> denotation_mask(const SopExpression& expression, const SystemSpec& spec,
                                  std::uint64_t state_cap = kDefaultStateCap);

/// Covered cells in lexicographic order.
std::vector<StateVector> denotation(const SopExpression& expression, const SystemSpec& spec,
                                    std::uint64_t state_cap = kDefaultStateCap);

struct RenderOptions {
  /// Join terms with " + " instead of " ∨ ".
  bool ascii = false;
  /// Print prefix/suffix sets as {<=j} / {>=j}. Defaults by form:
  /// minimal expressions use the sugar, disjoint ones print explicit sets.
  std::optional<bool> sugar;
};

/// "X1{2} X2{1,2}". With sugar, suffixes print as {>=j} and prefixes as
/// {<=j}; `prefer_upper` decides which sugar a full set gets.
std::string render_term(const ProductTerm& term, const SystemSpec& spec, bool sugar,
                        bool prefer_upper);

/// Whole expression; the empty disjunction renders as "0".
std::string render(const SopExpression& expression, const SystemSpec& spec,
                   const RenderOptions& options = {});

/// Parses the rendered grammar. Terms are separated by "∨", "+" or "v";
/// literals are Xk{a,b,...}, Xk{>=j}, Xk{<=j}; components absent from a term
/// are unconstrained. Throws ParseError.
std::vector<ProductTerm> parse_terms(std::string_view text, const SystemSpec& spec);

}  // namespace mvthresh
