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

/// @file render.hpp
/// Multi-valued Karnaugh maps (MVKMs) as text or CSV grids.
///
/// Columns enumerate the column variables in natural mixed-radix order with
/// the first variable outermost; rows do the same for the row variables.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvthresh/expression.hpp"
#include "mvthresh/system.hpp"

namespace mvthresh {

struct MapLayout {
  std::vector<std::size_t> column_vars;
  std::vector<std::size_t> row_vars;
};

/// First ceil(n/2) variables on columns, the rest on rows.
MapLayout default_layout(const SystemSpec& spec);

enum class MapFormat { kText, kCsv };
enum class MapContent { kLevel, kWeightedSum };

/// Largest grid rendered as text; bigger maps are CSV-only.
inline constexpr std::size_t kMaxTextComponents = 6;
inline constexpr std::uint64_t kMaxTextCells = 4096;

/// Optional decorations on a binary level map.
struct MapOverlay {
  /// Cells marked '*', typically MUVs or MLVs.
  std::vector<StateVector> marked;
  std::string marked_label;
  /// Disjoint cover drawn with one letter per term (a-z, A-Z, then '#').
  std::optional<SopExpression> cover;
};

struct LevelMapCell {
  bool value = false;
  char marker = ' ';
};

struct LevelMap {
  MapLayout layout;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::vector<LevelMapCell> cells;  // row-major
  std::uint64_t one_cells = 0;
  /// Cells per cover term, in term order.
  std::vector<std::uint64_t> region_sizes;
  /// Cells claimed by more than one cover term (marked '!').
  std::uint64_t overlapping_cells = 0;
  std::vector<std::string> legend;

  const LevelMapCell& at(std::size_t row, std::size_t column) const { return cells[row * columns + column]; }
};

LevelMap build_level_map(const SystemSpec& spec, const MapLayout& layout, const LevelPredicate& predicate,
                         const MapOverlay& overlay = {}, std::uint64_t state_cap = kDefaultStateCap);

/// Structure function (level digits) or weighted sums over the whole space.
std::string render_structure_map(const SystemSpec& spec, const MapLayout& layout,
                                 MapContent content = MapContent::kLevel,
                                 MapFormat format = MapFormat::kText,
                                 std::uint64_t state_cap = kDefaultStateCap);

/// Binary map of one level predicate: '1' where it holds, blank elsewhere,
/// followed by overlay markers and a legend (text format only).
std::string render_level_map(const SystemSpec& spec, const MapLayout& layout,
                             const LevelPredicate& predicate, const MapOverlay& overlay = {},
                             MapFormat format = MapFormat::kText,
                             std::uint64_t state_cap = kDefaultStateCap);

}  // namespace mvthresh
