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

#include "mvthresh/pre.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

#include "mvthresh/errors.hpp"

namespace mvthresh {

std::string_view to_string(PreMethod method) {
  switch (method) {
    case PreMethod::kShelling: return "shelling";
    case PreMethod::kReflection: return "reflection";
    case PreMethod::kExpansion: return "expansion";
  }
  return "?";
}

PreMethod parse_pre_method(std::string_view name) {
  if (name == "shelling") return PreMethod::kShelling;
  if (name == "reflection") return PreMethod::kReflection;
  if (name == "expansion") return PreMethod::kExpansion;
  throw ParseError("unknown PRE method \"" + std::string(name) +
                   "\" (expected shelling, reflection or expansion)");
}

// ---------------------------------------------------------------------------
// Shelling

std::optional<ProductTerm> subcube_residual(const ProductTerm& term,
                                            std::span<const ProductTerm> earlier,
                                            const SystemSpec& spec) {
  if (term.is_empty()) return std::nullopt;
  std::vector<const ProductTerm*> blockers;
  for (const auto& e : earlier) {
    if (!is_disjoint_pair(term, e)) blockers.push_back(&e);
  }
  if (blockers.empty()) return term;

  const std::size_t n = term.size();
  std::vector<std::vector<int>> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (int v = 0; v <= spec.max_state(k); ++v) {
      if (term.mask(k) & singleton_mask(v)) values[k].push_back(v);
    }
  }
  std::vector<InstanceMask> projection(n, 0);
  std::uint64_t residual_cells = 0;
  std::vector<std::size_t> pos(n, 0);
  StateVector x{std::vector<int>(n)};
  while (true) {
    for (std::size_t k = 0; k < n; ++k) x[k] = values[k][pos[k]];
    const bool blocked =
        std::any_of(blockers.begin(), blockers.end(), [&](const ProductTerm* b) { return b->covers(x); });
    if (!blocked) {
      ++residual_cells;
      for (std::size_t k = 0; k < n; ++k) projection[k] |= singleton_mask(x[k]);
    }
    std::size_t k = n;
    while (k-- > 0) {
      if (++pos[k] < values[k].size()) break;
      pos[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  if (residual_cells == 0) return std::nullopt;
  ProductTerm box(std::move(projection));
  if (cell_count(box) != residual_cells) return std::nullopt;
  return box;
}

namespace {

// Residuals for a complete ordering; empty when some step is not a subcube.
std::optional<std::vector<ProductTerm>> shell_in_order(const std::vector<ProductTerm>& terms,
                                                       const std::vector<std::size_t>& order,
                                                       const SystemSpec& spec) {
  std::vector<ProductTerm> placed;
  std::vector<ProductTerm> residuals;
  for (std::size_t idx : order) {
    auto r = subcube_residual(terms[idx], placed, spec);
    if (!r) return std::nullopt;
    residuals.push_back(std::move(*r));
    placed.push_back(terms[idx]);
  }
  return residuals;
}

constexpr std::size_t kBacktrackLimit = 20;
constexpr std::size_t kBacktrackBudget = 200'000;

// Depth-first search over orderings. The residual of a term depends only on
// the set of terms placed before it, so failed subsets are memoized.
class ShellingSearch {
 public:
  ShellingSearch(const std::vector<ProductTerm>& terms, std::vector<std::size_t> preference,
                 const SystemSpec& spec)
      : terms_(terms), preference_(std::move(preference)), spec_(spec) {}

  bool run() { return extend(0); }
  const std::vector<std::size_t>& order() const { return order_; }
  const std::vector<ProductTerm>& residuals() const { return residuals_; }

 private:
  bool extend(std::uint32_t placed_set) {
    if (order_.size() == terms_.size()) return true;
    if (dead_.count(placed_set)) return false;
    for (std::size_t idx : preference_) {
      if (placed_set & (std::uint32_t{1} << idx)) continue;
      if (++evaluations_ > kBacktrackBudget) return false;
      auto r = subcube_residual(terms_[idx], placed_, spec_);
      if (!r) continue;
      order_.push_back(idx);
      placed_.push_back(terms_[idx]);
      residuals_.push_back(std::move(*r));
      if (extend(placed_set | (std::uint32_t{1} << idx))) return true;
      order_.pop_back();
      placed_.pop_back();
      residuals_.pop_back();
    }
    dead_.insert(placed_set);
    return false;
  }

  const std::vector<ProductTerm>& terms_;
  std::vector<std::size_t> preference_;
  const SystemSpec& spec_;
  std::vector<std::size_t> order_;
  std::vector<ProductTerm> placed_;
  std::vector<ProductTerm> residuals_;
  std::unordered_set<std::uint32_t> dead_;
  std::size_t evaluations_ = 0;
};

// Without backtracking: repeatedly place the first admissible term.
bool greedy_shelling(const std::vector<ProductTerm>& terms, const std::vector<std::size_t>& preference,
                     const SystemSpec& spec, std::vector<std::size_t>& order,
                     std::vector<ProductTerm>& residuals) {
  std::vector<bool> used(terms.size(), false);
  std::vector<ProductTerm> placed;
  while (order.size() < terms.size()) {
    bool progressed = false;
    for (std::size_t idx : preference) {
      if (used[idx]) continue;
      auto r = subcube_residual(terms[idx], placed, spec);
      if (!r) continue;
      used[idx] = true;
      order.push_back(idx);
      placed.push_back(terms[idx]);
      residuals.push_back(std::move(*r));
      progressed = true;
      break;
    }
    if (!progressed) return false;
  }
  return true;
}

}  // namespace

ShellingResult shellable_disjoint_cover(const SopExpression& minimal, const SystemSpec& spec) {
  const auto& terms = minimal.terms;
  ShellingResult result;
  result.expression.predicate = minimal.predicate;
  result.expression.form = ExpressionForm::kDisjoint;

  auto succeed = [&](std::vector<std::size_t> order, std::vector<ProductTerm> residuals,
                     std::string strategy) {
    result.shellable = true;
    result.order = std::move(order);
    result.expression.terms = std::move(residuals);
    result.strategy = std::move(strategy);
    return result;
  };

  std::vector<std::size_t> by_cells(terms.size());
  std::iota(by_cells.begin(), by_cells.end(), 0);
  std::stable_sort(by_cells.begin(), by_cells.end(), [&](std::size_t a, std::size_t b) {
    return cell_count(terms[a]) > cell_count(terms[b]);
  });
  if (auto r = shell_in_order(terms, by_cells, spec)) return succeed(by_cells, std::move(*r), "cell-count");

  std::vector<std::size_t> by_literals(terms.size());
  std::iota(by_literals.begin(), by_literals.end(), 0);
  std::stable_sort(by_literals.begin(), by_literals.end(), [&](std::size_t a, std::size_t b) {
    return terms[a].constrained_literal_count(spec) < terms[b].constrained_literal_count(spec);
  });
  if (auto r = shell_in_order(terms, by_literals, spec)) {
    return succeed(by_literals, std::move(*r), "fewest-literals");
  }

  if (terms.size() <= kBacktrackLimit) {
    ShellingSearch search(terms, by_cells, spec);
    if (search.run()) return succeed(search.order(), search.residuals(), "backtracking");
  } else {
    std::vector<std::size_t> order;
    std::vector<ProductTerm> residuals;
    if (greedy_shelling(terms, by_cells, spec, order, residuals)) {
      return succeed(std::move(order), std::move(residuals), "greedy");
    }
  }

  result.shellable = false;
  result.order.clear();
  result.expression = disjoint_via_reflection(minimal, spec);
  result.strategy = "reflection-fallback";
  return result;
}

// ---------------------------------------------------------------------------
// Reflection Law

SopExpression disjoint_via_reflection(const SopExpression& expression, const SystemSpec& spec) {
  std::vector<ProductTerm> terms;
  for (const auto& t : expression.terms) {
    if (!t.is_empty()) terms.push_back(t);
  }
  std::stable_sort(terms.begin(), terms.end(), [&](const ProductTerm& a, const ProductTerm& b) {
    return a.constrained_literal_count(spec) < b.constrained_literal_count(spec);
  });

  // Absorption: drop a term contained in another (first copy of duplicates wins).
  std::vector<ProductTerm> kept;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < terms.size() && !absorbed; ++j) {
      if (i == j || !terms[i].subsumed_by(terms[j])) continue;
      absorbed = !(terms[j].subsumed_by(terms[i])) || j < i;
    }
    if (!absorbed) kept.push_back(terms[i]);
  }

  SopExpression out;
  out.predicate = expression.predicate;
  out.form = ExpressionForm::kDisjoint;
  for (std::size_t b = 0; b < kept.size(); ++b) {
    std::vector<ProductTerm> pieces{kept[b]};
    for (std::size_t a = 0; a < b; ++a) {
      const ProductTerm& prior = kept[a];
      std::vector<ProductTerm> next;
      for (auto& piece : pieces) {
        if (is_disjoint_pair(prior, piece)) {
          next.push_back(std::move(piece));
          continue;
        }
        // A/C keeps the literals of A that do not already hold on the piece.
        // Disjoint De Morgan: Y1' v Y1 Y2' v Y1 Y2 Y3' v ...
        ProductTerm rest = piece;
        for (std::size_t k = 0; k < piece.size(); ++k) {
          const InstanceMask outside = rest.mask(k) & ~prior.mask(k);
          if (outside == 0) continue;
          ProductTerm split = rest;
          split.set_mask(k, outside);
          next.push_back(std::move(split));
          rest.set_mask(k, rest.mask(k) & prior.mask(k));
        }
        // `rest` now lies inside A and is dropped.
      }
      pieces = std::move(next);
    }
    for (auto& p : pieces) out.terms.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boole-Shannon expansion

namespace {

class Expander {
 public:
  Expander(const SystemSpec& spec, const LevelPredicate& predicate)
      : spec_(spec), predicate_(predicate), n_(spec.component_count()), rest_max_(n_ + 1, 0) {
    for (std::size_t k = n_; k-- > 0;) {
      rest_max_[k] = rest_max_[k + 1] + spec.scaled_weight(k) * spec.max_state(k);
    }
  }

  std::vector<ProductTerm> run() {
    prefix_ = ProductTerm::universe(spec_);
    expand(0, 0);
    return std::move(terms_);
  }

 private:
  // Constant value of the predicate over all completions, if any.
  std::optional<bool> constant(std::size_t depth, std::int64_t partial) const {
    const int low = spec_.level_of_scaled_sum(partial);
    const int high = spec_.level_of_scaled_sum(partial + rest_max_[depth]);
    const bool first = predicate_.holds(low);
    for (int level = low + 1; level <= high; ++level) {
      if (predicate_.holds(level) != first) return std::nullopt;
    }
    return first;
  }

  void expand(std::size_t depth, std::int64_t partial) {
    if (auto c = constant(depth, partial)) {
      if (*c) terms_.push_back(prefix_);
      return;
    }
    const InstanceMask saved = prefix_.mask(depth);
    for (int v = 0; v <= spec_.max_state(depth); ++v) {
      prefix_.set_mask(depth, singleton_mask(v));
      expand(depth + 1, partial + spec_.scaled_weight(depth) * v);
    }
    prefix_.set_mask(depth, saved);
  }

  const SystemSpec& spec_;
  LevelPredicate predicate_;
  std::size_t n_;
  std::vector<std::int64_t> rest_max_;
  ProductTerm prefix_;
  std::vector<ProductTerm> terms_;
};

// One sweep per component, last to first: terms equal except at component k
// are replaced by one term carrying the union of their k-instances.
std::vector<ProductTerm> merge_siblings(std::vector<ProductTerm> terms, std::size_t n) {
  for (std::size_t k = n; k-- > 0;) {
    std::map<std::vector<InstanceMask>, std::size_t> slot;
    std::vector<ProductTerm> merged;
    for (auto& t : terms) {
      std::vector<InstanceMask> key = t.masks();
      key[k] = 0;
      auto [it, inserted] = slot.emplace(std::move(key), merged.size());
      if (inserted) {
        merged.push_back(std::move(t));
      } else {
        ProductTerm& into = merged[it->second];
        into.set_mask(k, into.mask(k) | t.mask(k));
      }
    }
    terms = std::move(merged);
  }
  return terms;
}

}  // namespace

SopExpression boole_shannon_pre(const SystemSpec& spec, const LevelPredicate& predicate,
                                const ExpansionOptions& options, std::uint64_t state_cap) {
  spec.state_space().require_within(state_cap);
  SopExpression out;
  out.predicate = predicate;
  out.form = ExpressionForm::kDisjoint;
  out.terms = Expander(spec, predicate).run();
  if (options.merge) out.terms = merge_siblings(std::move(out.terms), spec.component_count());
  return out;
}

// ---------------------------------------------------------------------------
// Assembly

SopExpression minimal_sop(const SystemSpec& spec, const LevelPredicate& predicate,
                          std::uint64_t state_cap) {
  const int top = spec.top_level();
  const int j = predicate.level;
  SopExpression constant_true{{ProductTerm::universe(spec)}, predicate, ExpressionForm::kMinimal};
  SopExpression constant_false{{}, predicate, ExpressionForm::kMinimal};
  switch (predicate.relation) {
    case LevelPredicate::Relation::kAtLeast:
      if (j <= 0) return constant_true;
      if (j > top) return constant_false;
      return sop_from_muvs(spec, enumerate_muvs(spec, j, state_cap));
    case LevelPredicate::Relation::kBelow:
      if (j <= 0) return constant_false;
      if (j > top) return constant_true;
      return sop_from_mlvs(spec, enumerate_mlvs(spec, j - 1, state_cap));
    case LevelPredicate::Relation::kExactly:
      break;
  }
  throw Error("minimal SOP is built for S >= j or S < j, not " + to_string(predicate));
}

SopExpression conjoin_disjoint(const SopExpression& a, const SopExpression& b,
                               const LevelPredicate& predicate) {
  SopExpression out;
  out.predicate = predicate;
  out.form = ExpressionForm::kDisjoint;
  for (const auto& ta : a.terms) {
    for (const auto& tb : b.terms) {
      ProductTerm t = conjoin(ta, tb);
      if (!t.is_empty()) out.terms.push_back(std::move(t));
    }
  }
  return out;
}

SopExpression probability_ready(const SystemSpec& spec, const LevelPredicate& predicate,
                                PreMethod method, std::uint64_t state_cap) {
  if (predicate.relation == LevelPredicate::Relation::kExactly) {
    return instance_expression(spec, predicate.level, method, state_cap);
  }
  SopExpression out;
  switch (method) {
    case PreMethod::kExpansion:
      return boole_shannon_pre(spec, predicate, {}, state_cap);
    case PreMethod::kShelling:
      spec.state_space().require_within(state_cap);
      out = shellable_disjoint_cover(minimal_sop(spec, predicate, state_cap), spec).expression;
      break;
    case PreMethod::kReflection:
      out = disjoint_via_reflection(minimal_sop(spec, predicate, state_cap), spec);
      break;
  }
  out.predicate = predicate;
  out.form = ExpressionForm::kDisjoint;
  return out;
}

SopExpression instance_expression(const SystemSpec& spec, int j, PreMethod method,
                                  std::uint64_t state_cap) {
  if (j < 0 || j > spec.top_level()) {
    throw LevelOutOfRange("level " + std::to_string(j) + " outside 0.." +
                          std::to_string(spec.top_level()));
  }
  SopExpression upper = probability_ready(spec, LevelPredicate::at_least(j), method, state_cap);
  SopExpression lower = probability_ready(spec, LevelPredicate::below(j + 1), method, state_cap);
  return conjoin_disjoint(upper, lower, LevelPredicate::exactly(j));
}

}  // namespace mvthresh
