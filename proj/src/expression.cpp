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

#include "mvthresh/expression.hpp"

#include <bit>
#include <cctype>

#include "mvthresh/errors.hpp"

namespace mvthresh {

MvLiteral complement(const MvLiteral& literal, int max_state) {
  return {literal.var, full_mask(max_state) & ~literal.instances};
}

// ---------------------------------------------------------------------------
// ProductTerm

ProductTerm ProductTerm::universe(const SystemSpec& spec) {
  std::vector<InstanceMask> masks(spec.component_count());
  for (std::size_t k = 0; k < masks.size(); ++k) masks[k] = full_mask(spec.max_state(k));
  return ProductTerm(std::move(masks));
}

ProductTerm ProductTerm::cell(const StateVector& x) {
  std::vector<InstanceMask> masks(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) masks[k] = singleton_mask(x[k]);
  return ProductTerm(std::move(masks));
}

bool ProductTerm::is_empty() const {
  for (auto m : masks_) {
    if (m == 0) return true;
  }
  return false;
}

bool ProductTerm::covers(const StateVector& x) const {
  for (std::size_t k = 0; k < masks_.size(); ++k) {
    if (!(masks_[k] & singleton_mask(x[k]))) return false;
  }
  return true;
}

bool ProductTerm::subsumed_by(const ProductTerm& other) const {
  for (std::size_t k = 0; k < masks_.size(); ++k) {
    if (masks_[k] & ~other.masks_[k]) return false;
  }
  return true;
}

std::size_t ProductTerm::constrained_literal_count(const SystemSpec& spec) const {
  std::size_t count = 0;
  for (std::size_t k = 0; k < masks_.size(); ++k) {
    if (masks_[k] != full_mask(spec.max_state(k))) ++count;
  }
  return count;
}

std::uint64_t cell_count(const ProductTerm& term) {
  std::uint64_t count = 1;
  for (auto m : term.masks()) count *= static_cast<std::uint64_t>(std::popcount(m));
  return count;
}

ProductTerm conjoin(const ProductTerm& a, const ProductTerm& b) {
  std::vector<InstanceMask> masks(a.size());
  for (std::size_t k = 0; k < masks.size(); ++k) masks[k] = a.mask(k) & b.mask(k);
  return ProductTerm(std::move(masks));
}

bool is_disjoint_pair(const ProductTerm& a, const ProductTerm& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((a.mask(k) & b.mask(k)) == 0) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Minimal SOPs from boundary vectors

SopExpression sop_from_muvs(const SystemSpec& spec, const BoundaryVectorSet& muvs) {
  SopExpression e;
  e.predicate = LevelPredicate::at_least(muvs.level);
  e.form = ExpressionForm::kMinimal;
  for (const auto& v : muvs.vectors) {
    std::vector<InstanceMask> masks(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) masks[k] = at_least_mask(v[k], spec.max_state(k));
    e.terms.emplace_back(std::move(masks));
  }
  return e;
}

SopExpression sop_from_mlvs(const SystemSpec& spec, const BoundaryVectorSet& mlvs) {
  (void)spec;
  SopExpression e;
  e.predicate = LevelPredicate::below(mlvs.level + 1);
  e.form = ExpressionForm::kMinimal;
  for (const auto& v : mlvs.vectors) {
    std::vector<InstanceMask> masks(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) masks[k] = at_most_mask(v[k]);
    e.terms.emplace_back(std::move(masks));
  }
  return e;
}

// ---------------------------------------------------------------------------
// PRE test and semantics

PreVerdict is_pre(const SopExpression& expression) {
  PreVerdict verdict;
  const auto& terms = expression.terms;
  for (std::size_t a = 0; a < terms.size(); ++a) {
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      if (!is_disjoint_pair(terms[a], terms[b])) {
        verdict.is_pre = false;
        verdict.overlap = std::make_pair(a, b);
        verdict.justification = "terms " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                " share cells (no opposing literal)";
        return verdict;
      }
    }
  }
  verdict.justification =
      "all " + std::to_string(terms.size()) +
      " terms pairwise disjoint; each term is a product of single-component literals over "
      "independent components";
  return verdict;
}

std::vector<bool> denotation_mask(const SopExpression& expression, const SystemSpec& spec,
                                  std::uint64_t state_cap) {
  const StateSpace& space = spec.state_space();
  space.require_within(state_cap);
  std::vector<bool> covered(space.size(), false);
  // Walk each term's own cells rather than testing every state per term.
  for (const auto& term : expression.terms) {
    if (term.is_empty()) continue;
    std::vector<std::vector<int>> values(term.size());
    for (std::size_t k = 0; k < term.size(); ++k) {
      for (int v = 0; v <= spec.max_state(k); ++v) {
        if (term.mask(k) & singleton_mask(v)) values[k].push_back(v);
      }
    }
    std::vector<std::size_t> pos(term.size(), 0);
    StateVector x{std::vector<int>(term.size())};
    while (true) {
      for (std::size_t k = 0; k < term.size(); ++k) x[k] = values[k][pos[k]];
      covered[space.index_of(x)] = true;
      std::size_t k = term.size();
      while (k-- > 0) {
        if (++pos[k] < values[k].size()) break;
        pos[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  return covered;
}

std::vector<StateVector> denotation(const SopExpression& expression, const SystemSpec& spec,
                                    std::uint64_t state_cap) {
  const std::vector<bool> covered = denotation_mask(expression, spec, state_cap);
  std::vector<StateVector> out;
  for (std::uint64_t i = 0; i < covered.size(); ++i) {
    if (covered[i]) out.push_back(spec.state_space().at(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace {

std::string render_literal(std::size_t var, InstanceMask mask, int max_state, bool sugar,
                           bool prefer_upper) {
  std::string out = "X" + std::to_string(var + 1) + "{";
  const InstanceMask full = full_mask(max_state);
  if (sugar && mask != 0) {
    const int low = std::countr_zero(mask);
    const int high = 63 - std::countl_zero(mask);
    const bool contiguous = std::popcount(mask) == high - low + 1;
    const bool is_suffix = contiguous && high == max_state;
    const bool is_prefix = contiguous && low == 0;
    if (mask == full) {
      return out + (prefer_upper ? ">=0}" : "<=" + std::to_string(max_state) + "}");
    }
    if (is_suffix && (prefer_upper || !is_prefix)) return out + ">=" + std::to_string(low) + "}";
    if (is_prefix) return out + "<=" + std::to_string(high) + "}";
  }
  bool first = true;
  for (int v = 0; v <= max_state; ++v) {
    if (!(mask & singleton_mask(v))) continue;
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string render_term(const ProductTerm& term, const SystemSpec& spec, bool sugar,
                        bool prefer_upper) {
  std::string out;
  for (std::size_t k = 0; k < term.size(); ++k) {
    if (k) out += ' ';
    out += render_literal(k, term.mask(k), spec.max_state(k), sugar, prefer_upper);
  }
  return out;
}

std::string render(const SopExpression& expression, const SystemSpec& spec,
                   const RenderOptions& options) {
  if (expression.terms.empty()) return "0";
  const bool sugar = options.sugar.value_or(expression.form == ExpressionForm::kMinimal);
  const bool prefer_upper = expression.predicate.relation != LevelPredicate::Relation::kBelow;
  const std::string separator = options.ascii ? " + " : " ∨ ";
  std::string out;
  for (std::size_t i = 0; i < expression.terms.size(); ++i) {
    if (i) out += separator;
    out += render_term(expression.terms[i], spec, sugar, prefer_upper);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const SystemSpec& spec) : text_(text), spec_(spec) {}

  std::vector<ProductTerm> parse() {
    std::vector<ProductTerm> terms;
    skip_space();
    if (at_end()) return terms;
    if (peek() == '0' && rest_is_blank(1)) return terms;
    while (true) {
      terms.push_back(parse_term());
      skip_space();
      if (at_end()) break;
      if (!consume_separator()) error("expected term separator");
    }
    return terms;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in expression");
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool rest_is_blank(std::size_t from) const {
    for (std::size_t i = pos_ + from; i < text_.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text_[i]))) return false;
    }
    return true;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  bool consume_separator() {
    return consume("∨") || consume("+") || consume("|");
  }

  int parse_int() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected integer");
    if (pos_ - start > 6) error("integer too long");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  ProductTerm parse_term() {
    ProductTerm term = ProductTerm::universe(spec_);
    std::vector<bool> seen(spec_.component_count(), false);
    bool any = false;
    while (true) {
      skip_space();
      if (at_end() || (peek() != 'X' && peek() != 'x')) break;
      ++pos_;
      const int var = parse_int();
      if (var < 1 || static_cast<std::size_t>(var) > spec_.component_count()) {
        error("component X" + std::to_string(var) + " does not exist");
      }
      const auto k = static_cast<std::size_t>(var - 1);
      if (seen[k]) error("component X" + std::to_string(var) + " repeated in one term");
      seen[k] = true;
      term.set_mask(k, parse_instances(spec_.max_state(k)));
      any = true;
    }
    if (!any) error("expected literal");
    return term;
  }

  InstanceMask parse_instances(int max_state) {
    skip_space();
    if (!consume("{")) error("expected '{'");
    skip_space();
    InstanceMask mask = 0;
    auto check = [&](int v) {
      if (v > max_state) error("instance " + std::to_string(v) + " exceeds max state");
    };
    if (consume(">=") || consume("≥")) {
      const int v = parse_int();
      check(v);
      mask = at_least_mask(v, max_state);
    } else if (consume("<=") || consume("≤")) {
      const int v = parse_int();
      check(v);
      mask = at_most_mask(v);
    } else {
      while (true) {
        const int v = parse_int();
        check(v);
        mask |= singleton_mask(v);
        skip_space();
        if (!consume(",")) break;
      }
    }
    skip_space();
    if (!consume("}")) error("expected '}'");
    return mask;
  }

  std::string_view text_;
  const SystemSpec& spec_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ProductTerm> parse_terms(std::string_view text, const SystemSpec& spec) {
  return TermParser(text, spec).parse();
}

}  // namespace mvthresh
