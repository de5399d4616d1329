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

#include "mvthresh/render.hpp"

#include <algorithm>
#include <sstream>

#include "mvthresh/errors.hpp"

namespace mvthresh {

MapLayout default_layout(const SystemSpec& spec) {
  const std::size_t n = spec.component_count();
  MapLayout layout;
  for (std::size_t k = 0; k < n; ++k) {
    (k < (n + 1) / 2 ? layout.column_vars : layout.row_vars).push_back(k);
  }
  return layout;
}

namespace {

// Grid geometry shared by every map flavour.
class Grid {
 public:
  Grid(const SystemSpec& spec, const MapLayout& layout) : spec_(spec), layout_(layout) {
    std::vector<bool> seen(spec.component_count(), false);
    auto take = [&](const std::vector<std::size_t>& vars) {
      for (std::size_t v : vars) {
        if (v >= seen.size() || seen[v]) throw Error("map layout lists a component twice or out of range");
        seen[v] = true;
      }
    };
    take(layout.column_vars);
    take(layout.row_vars);
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw Error("map layout must place every component on an axis");
    }
    columns_ = extent(layout.column_vars);
    rows_ = extent(layout.row_vars);
  }

  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }
  std::size_t row_of(const StateVector& x) const { return position(layout_.row_vars, x); }
  std::size_t column_of(const StateVector& x) const { return position(layout_.column_vars, x); }

  /// Value of `var` along an axis at the given position.
  int axis_value(const std::vector<std::size_t>& vars, std::size_t var_slot, std::size_t pos) const {
    std::size_t stride = 1;
    for (std::size_t s = vars.size(); s-- > var_slot + 1;) stride *= radix(vars[s]);
    return static_cast<int>((pos / stride) % radix(vars[var_slot]));
  }

  const MapLayout& layout() const { return layout_; }

 private:
  std::size_t radix(std::size_t var) const { return static_cast<std::size_t>(spec_.max_state(var)) + 1; }
  std::size_t extent(const std::vector<std::size_t>& vars) const {
    std::size_t e = 1;
    for (std::size_t v : vars) e *= radix(v);
    return e;
  }
  std::size_t position(const std::vector<std::size_t>& vars, const StateVector& x) const {
    std::size_t p = 0;
    for (std::size_t v : vars) p = p * radix(v) + static_cast<std::size_t>(x[v]);
    return p;
  }

  const SystemSpec& spec_;
  MapLayout layout_;
  std::size_t rows_ = 1;
  std::size_t columns_ = 1;
};

std::string rjust(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string var_name(std::size_t k) { return "X" + std::to_string(k + 1); }

void rstrip_line(std::string& line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
}

void require_text_size(const SystemSpec& spec, const Grid& grid) {
  if (spec.component_count() > kMaxTextComponents ||
      static_cast<std::uint64_t>(grid.rows()) * grid.columns() > kMaxTextCells) {
    throw Error("map too large for text output (limit " + std::to_string(kMaxTextComponents) +
                " components and " + std::to_string(kMaxTextCells) + " cells); use CSV");
  }
}

// Lays out a grid of cell strings with axis headers.
std::string format_grid(const Grid& grid, const std::vector<std::string>& cells, MapFormat format,
                        const std::string& title) {
  const MapLayout& layout = grid.layout();
  std::ostringstream out;
  if (format == MapFormat::kCsv) {
    std::string corner;
    for (std::size_t s = 0; s < layout.row_vars.size(); ++s) corner += (s ? " " : "") + var_name(layout.row_vars[s]);
    corner += " \\";
    for (std::size_t v : layout.column_vars) corner += " " + var_name(v);
    out << corner;
    for (std::size_t c = 0; c < grid.columns(); ++c) {
      out << ',';
      for (std::size_t s = 0; s < layout.column_vars.size(); ++s) {
        out << (s ? ":" : "") << grid.axis_value(layout.column_vars, s, c);
      }
    }
    out << '\n';
    for (std::size_t r = 0; r < grid.rows(); ++r) {
      for (std::size_t s = 0; s < layout.row_vars.size(); ++s) {
        out << (s ? ":" : "") << grid.axis_value(layout.row_vars, s, r);
      }
      for (std::size_t c = 0; c < grid.columns(); ++c) out << ',' << cells[r * grid.columns() + c];
      out << '\n';
    }
    return out.str();
  }

  std::size_t width = 3;
  for (const auto& c : cells) width = std::max(width, c.size() + 1);
  const std::size_t label = std::max<std::size_t>(4 * layout.row_vars.size(), 4);

  out << title << '\n';
  for (std::size_t s = 0; s < layout.column_vars.size(); ++s) {
    std::string line = rjust(var_name(layout.column_vars[s]), label) + " |";
    for (std::size_t c = 0; c < grid.columns(); ++c) {
      line += rjust(std::to_string(grid.axis_value(layout.column_vars, s, c)), width);
    }
    rstrip_line(line);
    out << line << '\n';
  }
  std::string names;
  for (std::size_t v : layout.row_vars) names += rjust(var_name(v), 4);
  out << rjust(names, label) << " +" << std::string(width * grid.columns(), '-') << '\n';
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    std::string values;
    for (std::size_t s = 0; s < layout.row_vars.size(); ++s) {
      values += rjust(std::to_string(grid.axis_value(layout.row_vars, s, r)), 4);
    }
    std::string line = rjust(values, label) + " |";
    for (std::size_t c = 0; c < grid.columns(); ++c) line += rjust(cells[r * grid.columns() + c], width);
    rstrip_line(line);
    out << line << '\n';
  }
  return out.str();
}

char cover_marker(std::size_t term) {
  if (term < 26) return static_cast<char>('a' + term);
  if (term < 52) return static_cast<char>('A' + (term - 26));
  return '#';
}

}  // namespace

LevelMap build_level_map(const SystemSpec& spec, const MapLayout& layout, const LevelPredicate& predicate,
                         const MapOverlay& overlay, std::uint64_t state_cap) {
  const StateSpace& space = spec.state_space();
  space.require_within(state_cap);
  const Grid grid(spec, layout);
  LevelMap map;
  map.layout = layout;
  map.rows = grid.rows();
  map.columns = grid.columns();
  map.cells.assign(map.rows * map.columns, {});

  std::vector<int> claims(map.cells.size(), 0);
  if (overlay.cover) map.region_sizes.assign(overlay.cover->terms.size(), 0);

  StateVector x = space.first();
  do {
    LevelMapCell& cell = map.cells[grid.row_of(x) * map.columns + grid.column_of(x)];
    cell.value = predicate.holds(evaluate_structure(spec, x));
    if (cell.value) ++map.one_cells;
    if (overlay.cover) {
      const auto& terms = overlay.cover->terms;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        if (!terms[t].covers(x)) continue;
        ++map.region_sizes[t];
        const std::size_t slot = grid.row_of(x) * map.columns + grid.column_of(x);
        if (++claims[slot] == 2) ++map.overlapping_cells;
        cell.marker = claims[slot] > 1 ? '!' : cover_marker(t);
      }
    }
  } while (space.next(x));

  for (const auto& v : overlay.marked) {
    if (!space.contains(v)) throw StateOutOfRange("marked cell " + to_string(v) + " outside the state space");
    map.cells[grid.row_of(v) * map.columns + grid.column_of(v)].marker = '*';
  }

  if (!overlay.marked.empty()) {
    map.legend.push_back("* : " + (overlay.marked_label.empty() ? std::string("marked cell") : overlay.marked_label));
  }
  if (overlay.cover) {
    const auto& terms = overlay.cover->terms;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      map.legend.push_back(std::string(1, cover_marker(t)) + " : " + render_term(terms[t], spec, false, true) +
                           " (" + std::to_string(map.region_sizes[t]) + (map.region_sizes[t] == 1 ? " cell)" : " cells)"));
    }
    if (map.overlapping_cells) {
      map.legend.push_back("! : cell covered by more than one term (" + std::to_string(map.overlapping_cells) +
                           " cells)");
    }
  }
  return map;
}

std::string render_structure_map(const SystemSpec& spec, const MapLayout& layout, MapContent content,
                                 MapFormat format, std::uint64_t state_cap) {
  const StateSpace& space = spec.state_space();
  space.require_within(state_cap);
  const Grid grid(spec, layout);
  if (format == MapFormat::kText) require_text_size(spec, grid);
  std::vector<std::string> cells(grid.rows() * grid.columns());
  StateVector x = space.first();
  do {
    cells[grid.row_of(x) * grid.columns() + grid.column_of(x)] =
        content == MapContent::kLevel ? std::to_string(evaluate_structure(spec, x))
                                      : to_string(spec.weighted_sum(x));
  } while (space.next(x));
  return format_grid(grid, cells, format, content == MapContent::kLevel ? "S(X)" : "weighted sum");
}

std::string render_level_map(const SystemSpec& spec, const MapLayout& layout, const LevelPredicate& predicate,
                             const MapOverlay& overlay, MapFormat format, std::uint64_t state_cap) {
  const Grid grid(spec, layout);
  if (format == MapFormat::kText) require_text_size(spec, grid);
  const LevelMap map = build_level_map(spec, layout, predicate, overlay, state_cap);
  std::vector<std::string> cells(map.cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const LevelMapCell& cell = map.cells[i];
    std::string text = cell.value ? "1" : (cell.marker != ' ' ? "." : "");
    if (cell.marker != ' ') text += cell.marker;
    cells[i] = std::move(text);
  }
  std::string out = format_grid(grid, cells, format, to_string(predicate));
  if (format == MapFormat::kText && !map.legend.empty()) {
    out += '\n';
    for (const auto& line : map.legend) out += line + '\n';
  }
  return out;
}

}  // namespace mvthresh
