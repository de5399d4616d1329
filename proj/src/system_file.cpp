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

#include "mvthresh/system_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mvthresh/errors.hpp"

namespace mvthresh {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("system definition: " + path + ": " + what);
}

void reject_unknown_keys(const json& object, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) schema_error(path, "unknown key \"" + key + "\"");
  }
}

Rational read_number(const json& value, const std::string& path) {
  try {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number_unsigned()) return Rational(value.get<unsigned long long>());
    if (value.is_number_float()) return parse_rational(value.dump());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    schema_error(path, e.what());
  }
  schema_error(path, "expected a number or a \"p/q\" string");
}

int read_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) schema_error(path, "expected an integer");
  const auto v = value.get<long long>();
  if (v < 0 || v > 1'000'000) schema_error(path, "integer out of range");
  return static_cast<int>(v);
}

const json& require(const json& object, const char* key, const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) schema_error(path, std::string("missing required key \"") + key + "\"");
  return *it;
}

std::vector<std::string> read_strings(const json& value, const std::string& path) {
  if (!value.is_array()) schema_error(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) schema_error(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

SystemDefinition parse_system_definition(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(json_text, e.byte);
    throw ParseError("system definition: line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) schema_error("$", "top level must be an object");
  reject_unknown_keys(doc, "$", {"name", "components", "thresholds", "sentinel", "labels"});

  SystemDefinition def;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) schema_error("$.name", "expected a string");
    def.name = it->get<std::string>();
  }

  const json& components = require(doc, "components", "$");
  if (!components.is_array()) schema_error("$.components", "expected an array");
  for (std::size_t k = 0; k < components.size(); ++k) {
    const std::string path = "$.components[" + std::to_string(k) + "]";
    const json& c = components[k];
    if (!c.is_object()) schema_error(path, "expected an object");
    reject_unknown_keys(c, path, {"max_state", "weight", "probs", "label"});
    ComponentDefinition cd;
    cd.max_state = read_int(require(c, "max_state", path), path + ".max_state");
    cd.weight = read_number(require(c, "weight", path), path + ".weight");
    if (auto it = c.find("probs"); it != c.end()) {
      if (!it->is_array()) schema_error(path + ".probs", "expected an array");
      std::vector<Rational> probs;
      for (std::size_t v = 0; v < it->size(); ++v) {
        probs.push_back(read_number((*it)[v], path + ".probs[" + std::to_string(v) + "]"));
      }
      cd.probs = std::move(probs);
    }
    if (auto it = c.find("label"); it != c.end()) {
      if (!it->is_string()) schema_error(path + ".label", "expected a string");
      cd.label = it->get<std::string>();
    }
    def.components.push_back(std::move(cd));
  }

  const json& thresholds = require(doc, "thresholds", "$");
  if (!thresholds.is_array()) schema_error("$.thresholds", "expected an array");
  for (std::size_t j = 0; j < thresholds.size(); ++j) {
    def.thresholds.push_back(read_number(thresholds[j], "$.thresholds[" + std::to_string(j) + "]"));
  }
  if (auto it = doc.find("sentinel"); it != doc.end()) def.sentinel = read_number(*it, "$.sentinel");

  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_object()) schema_error("$.labels", "expected an object");
    reject_unknown_keys(*it, "$.labels", {"component_states", "system_states"});
    if (auto c = it->find("component_states"); c != it->end()) {
      def.component_state_labels = read_strings(*c, "$.labels.component_states");
    }
    if (auto s = it->find("system_states"); s != it->end()) {
      def.system_state_labels = read_strings(*s, "$.labels.system_states");
    }
  }
  return def;
}

SystemDefinition load_system_definition(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system_definition(buffer.str());
}

ValidationResult SystemDefinition::validate() const {
  std::vector<int> max_states;
  std::vector<Rational> weights;
  for (const auto& c : components) {
    max_states.push_back(c.max_state);
    weights.push_back(c.weight);
  }
  return validate_spec(max_states, weights, thresholds);
}

SystemSpec SystemDefinition::to_spec() const {
  std::vector<int> max_states;
  std::vector<Rational> weights;
  for (const auto& c : components) {
    max_states.push_back(c.max_state);
    weights.push_back(c.weight);
  }
  return SystemSpec::create(std::move(max_states), std::move(weights), thresholds);
}

std::optional<ExactDistribution> SystemDefinition::distribution() const {
  std::size_t with = 0;
  for (const auto& c : components) with += c.probs.has_value();
  if (with == 0) return std::nullopt;
  if (with != components.size()) {
    throw ParseError("system definition: probs given for " + std::to_string(with) + " of " +
                     std::to_string(components.size()) + " components");
  }
  ExactDistribution d;
  for (const auto& c : components) d.masses.push_back(*c.probs);
  return d;
}

}  // namespace mvthresh
