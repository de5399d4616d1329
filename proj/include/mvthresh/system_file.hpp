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

/// @file system_file.hpp
/// JSON system definition files.
///
///   {
///     "name": "four-engine aircraft",
///     "components": [ {"max_state": 2, "weight": 1, "probs": ["1/3", "1/3", "1/3"]}, ... ],
///     "thresholds": [0, 2, 4, 6],
///     "sentinel": 9,
///     "labels": {"component_states": [...], "system_states": [...]}
///   }
///
/// Numbers may be JSON integers, decimals, or strings holding "p/q".
/// "sentinel" (the closing bound of the top level) is accepted and ignored.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvthresh/distribution.hpp"
#include "mvthresh/rational.hpp"
#include "mvthresh/system.hpp"

namespace mvthresh {

struct ComponentDefinition {
  int max_state = 1;
  Rational weight;
  std::optional<std::vector<Rational>> probs;
  std::string label;
};

struct SystemDefinition {
  std::string name;
  std::vector<ComponentDefinition> components;
  std::vector<Rational> thresholds;
  std::optional<Rational> sentinel;
  std::vector<std::string> component_state_labels;
  std::vector<std::string> system_state_labels;

  ValidationResult validate() const;
  /// Throws InvalidSpecError.
  SystemSpec to_spec() const;
  /// Present when every component lists probs; ParseError when only some do.
  std::optional<ExactDistribution> distribution() const;
};

/// Throws ParseError with line/column for syntax errors and the offending
/// key path for schema errors.
SystemDefinition parse_system_definition(std::string_view json_text);
SystemDefinition load_system_definition(const std::filesystem::path& path);

}  // namespace mvthresh
