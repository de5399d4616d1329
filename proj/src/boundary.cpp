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

#include "mvthresh/boundary.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mvthresh/errors.hpp"

namespace mvthresh {

std::string_view to_string(BoundaryKind kind) {
  return kind == BoundaryKind::kMinimalUpper ? "MUV" : "MLV";
}

std::vector<OrbitClass> orbit_summary(std::span<const StateVector> vectors) {
  std::map<StateVector, std::size_t, std::greater<>> classes;
  for (const auto& v : vectors) {
    std::vector<int> sorted = v.values();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    ++classes[StateVector(std::move(sorted))];
  }
  std::vector<OrbitClass> out;
  out.reserve(classes.size());
  for (auto& [rep, count] : classes) out.push_back({rep, count});
  return out;
}

namespace {

// Walks the lattice from the top index down so that output is already in
// descending lexicographic order.
template <typename Keep>
std::vector<StateVector> scan_descending(const SystemSpec& spec, std::uint64_t state_cap, Keep keep) {
  const StateSpace& space = spec.state_space();
  space.require_within(state_cap);
  std::vector<StateVector> out;
  for (std::uint64_t i = space.size(); i-- > 0;) {
    StateVector x = space.at(i);
    if (keep(x)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

BoundaryVectorSet enumerate_muvs(const SystemSpec& spec, int j, std::uint64_t state_cap) {
  if (j < 1 || j > spec.top_level()) {
    throw LevelOutOfRange("MUVs exist for levels 1.." + std::to_string(spec.top_level()) +
                          ", not " + std::to_string(j));
  }
  const std::int64_t threshold = spec.scaled_threshold(j);
  BoundaryVectorSet set;
  set.level = j;
  set.kind = BoundaryKind::kMinimalUpper;
  set.vectors = scan_descending(spec, state_cap, [&](const StateVector& x) {
    const std::int64_t sum = spec.scaled_sum(x);
    if (sum < threshold) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] > 0 && sum - spec.scaled_weight(k) >= threshold) return false;
    }
    return true;
  });
  set.orbits = orbit_summary(set.vectors);
  return set;
}

BoundaryVectorSet enumerate_mlvs(const SystemSpec& spec, int j, std::uint64_t state_cap) {
  if (j < 0 || j >= spec.top_level()) {
    throw LevelOutOfRange("MLVs exist for levels 0.." + std::to_string(spec.top_level() - 1) +
                          ", not " + std::to_string(j));
  }
  const std::int64_t ceiling = spec.scaled_threshold(j + 1);
  BoundaryVectorSet set;
  set.level = j;
  set.kind = BoundaryKind::kMaximalLower;
  set.vectors = scan_descending(spec, state_cap, [&](const StateVector& x) {
    const std::int64_t sum = spec.scaled_sum(x);
    if (sum >= ceiling) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] < spec.max_state(k) && sum + spec.scaled_weight(k) < ceiling) return false;
    }
    return true;
  });
  set.orbits = orbit_summary(set.vectors);
  return set;
}

BoundaryVerdict verify_boundary_minimality(const SystemSpec& spec, const BoundaryVectorSet& set,
                                           std::uint64_t state_cap) {
  const StateSpace& space = spec.state_space();
  space.require_within(state_cap);
  const bool upper = set.kind == BoundaryKind::kMinimalUpper;
  const int j = set.level;
  // Level-set membership: S >= j for MUVs, S <= j for MLVs.
  auto in_level_set = [&](const StateVector& x) {
    const int s = evaluate_structure(spec, x);
    return upper ? s >= j : s <= j;
  };
  auto fail = [](std::string message, const StateVector& x) {
    return BoundaryVerdict{false, std::move(message) + " at " + to_string(x), x};
  };

  for (const auto& v : set.vectors) {
    if (!space.contains(v)) return fail("vector outside the state space", v);
    if (!in_level_set(v)) {
      return fail(upper ? "MUV below its level" : "MLV above its level", v);
    }
    // Full cone: every y < v (MUV) or y > v (MLV) must leave the level set.
    StateVector y = space.first();
    do {
      if (y == v) continue;
      const bool in_cone = upper ? componentwise_leq(y, v) : componentwise_leq(v, y);
      if (in_cone && in_level_set(y)) {
        return fail(std::string(upper ? "MUV not minimal" : "MLV not maximal") +
                        ", dominated by " + to_string(y),
                    v);
      }
    } while (space.next(y));
  }

  // Completeness and soundness of the characterization.
  StateVector x = space.first();
  do {
    const bool covered = std::any_of(set.vectors.begin(), set.vectors.end(), [&](const StateVector& v) {
      return upper ? componentwise_leq(v, x) : componentwise_leq(x, v);
    });
    if (covered != in_level_set(x)) {
      return fail(covered ? "state covered by the set but outside the level set"
                          : "state in the level set not covered by the set (incomplete)",
                  x);
    }
  } while (space.next(x));

  return {};
}

BinaryImageReport check_binary_imaged(const SystemSpec& spec,
                                      std::span<const BoundaryVectorSet> muvs_per_level,
                                      std::span<const BoundaryVectorSet> mlvs_per_level) {
  auto find = [](std::span<const BoundaryVectorSet> sets, int level) -> const BoundaryVectorSet* {
    for (const auto& s : sets) {
      if (s.level == level) return &s;
    }
    return nullptr;
  };

  BinaryImageReport report;
  const int top = spec.top_level();
  report.per_level.assign(static_cast<std::size_t>(top) + 1, true);
  for (int j = 1; j <= top; ++j) {
    bool ok = true;
    const BoundaryVectorSet* muvs = find(muvs_per_level, j);
    const BoundaryVectorSet* mlvs = find(mlvs_per_level, j - 1);
    if (!muvs || !mlvs) ok = false;
    if (muvs) {
      for (const auto& v : muvs->vectors) {
        for (int c : v) ok = ok && (c == 0 || c == j);
      }
    }
    if (mlvs) {
      for (const auto& v : mlvs->vectors) {
        for (std::size_t k = 0; k < v.size(); ++k) {
          ok = ok && (v[k] == j - 1 || v[k] == spec.max_state(k));
        }
      }
    }
    report.per_level[static_cast<std::size_t>(j)] = ok;
    report.overall = report.overall && ok;
  }
  return report;
}

}  // namespace mvthresh
