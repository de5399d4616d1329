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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvthresh/boundary.hpp"
#include "mvthresh/errors.hpp"
#include "mvthresh/expression.hpp"
#include "mvthresh/oracle.hpp"
#include "mvthresh/pre.hpp"
#include "mvthresh/probability.hpp"
#include "mvthresh/render.hpp"
#include "mvthresh/system_file.hpp"

namespace mvthresh::cli {
namespace {

struct Common {
  std::string file;
  std::optional<std::uint64_t> state_cap;
};

struct AnalyzeOptions {
  std::optional<int> level;
  std::string perspective = "both";
  std::string method = "shelling";
  std::string dist;
  bool use_float = false;
  bool ascii = false;
};

struct MapOptions {
  std::optional<int> level;
  std::string perspective;
  std::string overlay = "none";
  std::string format = "text";
  std::string content = "level";
  std::string method = "shelling";
  bool ascii = false;
};

std::uint64_t resolve_cap(const Common& common) {
  if (common.state_cap) return *common.state_cap;
  if (const char* env = std::getenv("MVTHRESH_STATE_CAP"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw ParseError("MVTHRESH_STATE_CAP must be a positive integer");
    return v;
  }
  return kDefaultStateCap;
}

std::string vector_list(const std::vector<StateVector>& vectors) {
  std::string out;
  for (std::size_t i = 0; i < vectors.size(); ++i) out += (i ? " " : "") + to_string(vectors[i]);
  return out;
}

std::string orbit_text(const OrbitClass& orbit) {
  std::string rep = "[";
  for (std::size_t k = 0; k < orbit.representative.size(); ++k) {
    rep += (k ? "," : "") + std::to_string(orbit.representative[k]);
  }
  return rep + "] x" + std::to_string(orbit.count);
}

void print_terms(std::ostream& out, const SopExpression& e, const SystemSpec& spec, bool ascii) {
  if (e.terms.empty()) {
    out << "    0\n";
    return;
  }
  const bool sugar = e.form == ExpressionForm::kMinimal;
  const bool upper = e.predicate.relation != LevelPredicate::Relation::kBelow;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    out << (i == 0 ? "    " : (ascii ? "  + " : "  ∨ ")) << render_term(e.terms[i], spec, sugar, upper)
        << "   [" << cell_count(e.terms[i]) << "]\n";
  }
}

template <typename Value>
void print_probabilities(std::ostream& out, const ProbabilityReport<Value>& success,
                         const ProbabilityReport<Value>& failure) {
  std::vector<std::array<std::string, 4>> rows{{"level", "P(S=j)", "P(S>=j)", "P(S<=j)"}};
  Value total = 0;
  for (std::size_t j = 0; j < success.exactly.size(); ++j) {
    rows.push_back({std::to_string(j), value_to_string(success.exactly[j]),
                    value_to_string(success.at_least[j]), value_to_string(success.at_most[j])});
    total += success.exactly[j];
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) {
      line += row[c] + std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  bool dual = true;
  for (std::size_t j = 0; j < success.exactly.size(); ++j) {
    dual = dual && values_equal(success.exactly[j], failure.exactly[j]);
  }
  out << "sum of P(S=j): " << value_to_string(total) << '\n';
  out << "success/failure perspectives agree: " << (dual ? "yes" : "NO") << '\n';
  out << "oracle agreement: " << (success.oracle_agrees && failure.oracle_agrees ? "yes" : "NO") << '\n';
}

// ---------------------------------------------------------------------------

int cmd_validate(const Common& common, std::ostream& out) {
  const SystemDefinition def = load_system_definition(common.file);
  const ValidationResult result = def.validate();
  if (!result.ok()) {
    out << "invalid system definition\n";
    for (const auto& v : result.violations) out << "  " << to_string(v.kind) << ": " << v.message << '\n';
    return kExitFailure;
  }
  const SystemSpec spec = def.to_spec();
  if (auto d = def.distribution()) validate_distribution(spec, *d);
  out << "ok: " << spec.component_count() << " components, levels 0.." << spec.top_level() << ", "
      << spec.state_space().size() << " states\n";
  return kExitOk;
}

int cmd_analyze(const Common& common, const AnalyzeOptions& opt, std::ostream& out) {
  const std::uint64_t cap = resolve_cap(common);
  const SystemDefinition def = load_system_definition(common.file);
  const SystemSpec spec = def.to_spec();
  const PreMethod method = parse_pre_method(opt.method);
  const int top = spec.top_level();
  if (opt.level && (*opt.level < 1 || *opt.level > top)) {
    throw LevelOutOfRange("--level must lie in 1.." + std::to_string(top));
  }
  std::vector<Perspective> perspectives;
  if (opt.perspective == "both") {
    perspectives = {Perspective::kSuccess, Perspective::kFailure};
  } else {
    perspectives = {parse_perspective(opt.perspective)};
  }

  const StateSpaceTable table = build_table(spec, cap);
  out << "system: " << (def.name.empty() ? common.file : def.name) << " (" << spec.component_count()
      << " components, levels 0.." << top << ", " << spec.state_space().size() << " states)\n";

  bool all_ok = true;
  for (Perspective perspective : perspectives) {
    for (int j = top; j >= 1; --j) {
      if (opt.level && *opt.level != j) continue;
      const bool success = perspective == Perspective::kSuccess;
      const LevelPredicate predicate = success ? LevelPredicate::at_least(j) : LevelPredicate::below(j);
      const BoundaryVectorSet set = success ? enumerate_muvs(spec, j, cap) : enumerate_mlvs(spec, j - 1, cap);
      out << "\n== level " << j << ' ' << to_string(perspective) << ": " << to_string(predicate) << " ==\n";
      out << to_string(set.kind) << "s (" << set.size() << ", level " << set.level << "):\n";
      for (const auto& orbit : set.orbits) out << "  " << orbit_text(orbit) << '\n';
      out << "  vectors: " << vector_list(set.vectors) << '\n';

      const SopExpression minimal = success ? sop_from_muvs(spec, set) : sop_from_mlvs(spec, set);
      out << "minimal SOP (" << minimal.size() << " terms):\n";
      print_terms(out, minimal, spec, opt.ascii);

      const ShellingResult shelling = shellable_disjoint_cover(minimal, spec);
      const SopExpression pre =
          method == PreMethod::kShelling ? shelling.expression : probability_ready(spec, predicate, method, cap);
      out << "PRE via " << to_string(method) << " (" << pre.size() << " terms):\n";
      print_terms(out, pre, spec, opt.ascii);
      out << "shellable: " << (shelling.shellable ? "true" : "false") << " (" << shelling.strategy << ")\n";
      const PreVerdict verdict = is_pre(pre);
      out << "PRE check: " << (verdict.is_pre ? "ok" : "FAILED") << " - " << verdict.justification << '\n';
      const EquivalenceVerdict minimal_eq = assert_equivalent(table, minimal, predicate);
      const EquivalenceVerdict pre_eq = assert_equivalent(table, pre, predicate);
      const bool ok = verdict.is_pre && minimal_eq.equal && pre_eq.equal;
      all_ok = all_ok && ok;
      out << "oracle: " << (ok ? "equivalent" : "MISMATCH") << " (" << table.count(predicate) << " cells)\n";
    }
  }

  if (!opt.dist.empty()) {
    std::optional<ExactDistribution> exact;
    if (opt.dist == "uniform") {
      exact = uniform_distribution<Rational>(spec);
    } else if (opt.dist == "file") {
      exact = def.distribution();
      if (!exact) throw ParseError("--dist file requires probs for every component");
    } else {
      throw ParseError("--dist must be uniform or file");
    }
    out << "\n== probabilities (" << opt.dist << ", " << (opt.use_float ? "float" : "exact") << ", "
        << to_string(method) << ") ==\n";
    if (opt.use_float) {
      const FloatDistribution d = to_float(*exact);
      const auto s = level_probabilities_success(spec, d, method, cap);
      const auto f = level_probabilities_failure(spec, d, method, cap);
      print_probabilities(out, s, f);
      all_ok = all_ok && s.oracle_agrees && f.oracle_agrees;
    } else {
      const auto s = level_probabilities_success(spec, *exact, method, cap);
      const auto f = level_probabilities_failure(spec, *exact, method, cap);
      print_probabilities(out, s, f);
      all_ok = all_ok && s.oracle_agrees && f.oracle_agrees && s.exactly == f.exactly;
    }
  }
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_map(const Common& common, const MapOptions& opt, std::ostream& out) {
  const std::uint64_t cap = resolve_cap(common);
  const SystemSpec spec = load_system_definition(common.file).to_spec();
  const MapLayout layout = default_layout(spec);
  MapFormat format;
  if (opt.format == "text") {
    format = MapFormat::kText;
  } else if (opt.format == "csv") {
    format = MapFormat::kCsv;
  } else {
    throw ParseError("--format must be text or csv");
  }

  if (!opt.level) {
    if (opt.overlay != "none") throw ParseError("--overlay needs --level");
    MapContent content;
    if (opt.content == "level") {
      content = MapContent::kLevel;
    } else if (opt.content == "sum") {
      content = MapContent::kWeightedSum;
    } else {
      throw ParseError("--content must be level or sum");
    }
    out << render_structure_map(spec, layout, content, format, cap);
    return kExitOk;
  }

  // "lower" is S <= j, indexed like the MLV set sigma(j); it is the default
  // perspective for --overlay mlv.
  const int j = *opt.level;
  const int top = spec.top_level();
  std::string perspective = opt.perspective;
  if (perspective.empty()) perspective = opt.overlay == "mlv" ? "lower" : "success";
  LevelPredicate predicate;
  if (perspective == "success") {
    if (j < 1 || j > top) throw LevelOutOfRange("--level must lie in 1.." + std::to_string(top));
    predicate = LevelPredicate::at_least(j);
  } else if (perspective == "failure") {
    if (j < 1 || j > top) throw LevelOutOfRange("--level must lie in 1.." + std::to_string(top));
    predicate = LevelPredicate::below(j);
  } else if (perspective == "lower") {
    if (j < 0 || j >= top) throw LevelOutOfRange("--level must lie in 0.." + std::to_string(top - 1));
    predicate = LevelPredicate::below(j + 1);
  } else {
    throw ParseError("--perspective must be success, failure or lower");
  }
  // Both S >= split and S < split are bounded by theta(split) and sigma(split-1).
  const int split = predicate.level;

  MapOverlay overlay;
  if (opt.overlay == "muv") {
    overlay.marked = enumerate_muvs(spec, split, cap).vectors;
    overlay.marked_label = "MUV, level " + std::to_string(split);
  } else if (opt.overlay == "mlv") {
    overlay.marked = enumerate_mlvs(spec, split - 1, cap).vectors;
    overlay.marked_label = "MLV, level " + std::to_string(split - 1);
  } else if (opt.overlay == "cover") {
    overlay.cover = probability_ready(spec, predicate, parse_pre_method(opt.method), cap);
  } else if (opt.overlay != "none") {
    throw ParseError("--overlay must be none, muv, mlv or cover");
  }
  out << render_level_map(spec, layout, predicate, overlay, format, cap);
  return kExitOk;
}

int cmd_verify(const Common& common, std::ostream& out) {
  const std::uint64_t cap = resolve_cap(common);
  const SystemDefinition def = load_system_definition(common.file);
  const ValidationResult validation = def.validate();
  if (!validation.ok()) {
    out << "[FAIL] system definition invalid\n";
    for (const auto& v : validation.violations) out << "  " << to_string(v.kind) << ": " << v.message << '\n';
    return kExitFailure;
  }
  const SystemSpec spec = def.to_spec();
  spec.state_space().require_within(cap);
  const StateSpaceTable table = build_table(spec, cap);
  const int top = spec.top_level();

  std::size_t passed = 0;
  std::size_t failed = 0;
  auto check = [&](bool ok, const std::string& what) {
    out << (ok ? "[PASS] " : "[FAIL] ") << what << '\n';
    (ok ? passed : failed)++;
  };

  const CoherenceReport coherence = check_coherence(spec, cap);
  check(coherence.monotone, "structure function is monotone");
  out << "  causal=" << (coherence.causal ? "yes" : "no") << " relevant=";
  for (bool r : coherence.relevant) out << (r ? '1' : '0');
  out << '\n';

  for (int j = 1; j <= top; ++j) {
    const BoundaryVectorSet muvs = enumerate_muvs(spec, j, cap);
    const BoundaryVectorSet mlvs = enumerate_mlvs(spec, j - 1, cap);
    const BoundaryVerdict mu = verify_boundary_minimality(spec, muvs, cap);
    const BoundaryVerdict ml = verify_boundary_minimality(spec, mlvs, cap);
    check(mu.ok, "MUVs of level " + std::to_string(j) + " (" + std::to_string(muvs.size()) + ")" +
                     (mu.ok ? "" : ": " + mu.message));
    check(ml.ok, "MLVs of level " + std::to_string(j - 1) + " (" + std::to_string(mlvs.size()) + ")" +
                     (ml.ok ? "" : ": " + ml.message));
    const auto up = LevelPredicate::at_least(j);
    const auto down = LevelPredicate::below(j);
    check(assert_equivalent(table, sop_from_muvs(spec, muvs), up).equal, "minimal SOP " + to_string(up));
    check(assert_equivalent(table, sop_from_mlvs(spec, mlvs), down).equal, "minimal SOP " + to_string(down));
  }

  const std::vector<PreMethod> methods{PreMethod::kShelling, PreMethod::kReflection, PreMethod::kExpansion};
  for (int j = 0; j <= top; ++j) {
    std::vector<LevelPredicate> predicates{LevelPredicate::exactly(j)};
    if (j >= 1) {
      predicates.push_back(LevelPredicate::at_least(j));
      predicates.push_back(LevelPredicate::below(j));
    }
    for (const auto& predicate : predicates) {
      std::optional<std::vector<bool>> reference;
      bool same = true;
      for (PreMethod method : methods) {
        const SopExpression pre = probability_ready(spec, predicate, method, cap);
        const bool ok = is_pre(pre).is_pre && assert_equivalent(table, pre, predicate).equal;
        check(ok, "PRE " + to_string(predicate) + " via " + std::string(to_string(method)) + " (" +
                      std::to_string(pre.size()) + " terms)");
        const auto mask = denotation_mask(pre, spec, cap);
        if (!reference) reference = mask;
        same = same && mask == *reference;
      }
      check(same, "three PRE methods agree on " + to_string(predicate));
    }
  }

  std::vector<std::pair<std::string, ExactDistribution>> dists{{"uniform", uniform_distribution<Rational>(spec)}};
  if (auto d = def.distribution()) dists.emplace_back("file", *d);
  for (const auto& [label, d] : dists) {
    for (PreMethod method : methods) {
      const auto s = level_probabilities_success(spec, d, method, cap);
      const auto f = level_probabilities_failure(spec, d, method, cap);
      Rational total = 0;
      for (const auto& p : s.exactly) total += p;
      check(s.oracle_agrees && f.oracle_agrees && s.exactly == f.exactly && total == 1,
            "probabilities (" + label + ", " + std::string(to_string(method)) +
                "): oracle, success/failure duality, sum to 1");
    }
  }

  out << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic analysis of multi-state truly-threshold systems", "mvthresh"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("file", common.file, "system definition (JSON)")->required();
    sub->add_option("--state-cap", common.state_cap,
                    "largest state space scanned exhaustively (env MVTHRESH_STATE_CAP)");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a system definition");
  add_common(validate);

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand("analyze", "boundary vectors, SOPs, PREs and probabilities");
  add_common(analyze);
  analyze->add_option("--level", analyze_opt.level, "only this level (1..M)");
  analyze->add_option("--perspective", analyze_opt.perspective, "success, failure or both")
      ->check(CLI::IsMember({"success", "failure", "both"}));
  analyze->add_option("--method", analyze_opt.method, "shelling, reflection or expansion")
      ->check(CLI::IsMember({"shelling", "reflection", "expansion"}));
  analyze->add_option("--dist", analyze_opt.dist, "uniform, or file (probs from the definition)")
      ->check(CLI::IsMember({"uniform", "file"}));
  analyze->add_flag("--float", analyze_opt.use_float, "floating-point probabilities");
  analyze->add_flag("--ascii", analyze_opt.ascii, "join terms with + instead of ∨");

  MapOptions map_opt;
  CLI::App* map = app.add_subcommand("map", "render a multi-valued Karnaugh map");
  add_common(map);
  map->add_option("--level", map_opt.level, "binary map of one level");
  map->add_option("--perspective", map_opt.perspective, "success (S>=j), failure (S<j) or lower (S<=j)")
      ->check(CLI::IsMember({"success", "failure", "lower"}));
  map->add_option("--overlay", map_opt.overlay, "none, muv, mlv or cover")
      ->check(CLI::IsMember({"none", "muv", "mlv", "cover"}));
  map->add_option("--format", map_opt.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  map->add_option("--content", map_opt.content, "level or sum (structure map only)")
      ->check(CLI::IsMember({"level", "sum"}));
  map->add_option("--method", map_opt.method, "PRE method for --overlay cover")
      ->check(CLI::IsMember({"shelling", "reflection", "expansion"}));

  CLI::App* verify = app.add_subcommand("verify", "exhaustive cross-check of every construction");
  add_common(verify);

  if (!args.empty() && !args.front().starts_with('-') && !app.get_subcommand_no_throw(args.front())) {
    err << "usage error: unknown command \"" << args.front() << "\" (expected validate, analyze, map or verify)\n";
    return kExitUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(common, out);
    if (*analyze) return cmd_analyze(common, analyze_opt, out);
    if (*map) return cmd_map(common, map_opt, out);
    if (*verify) return cmd_verify(common, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace mvthresh::cli
