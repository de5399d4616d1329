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

/// @file boundary.hpp
/// Minimal upper vectors (MUVs) and maximal lower vectors (MLVs).
///
/// theta(j) holds the minimal vectors of {x : S(x) >= j}, j = 1..M;
/// sigma(j) holds the maximal vectors of {x : S(x) <= j}, j = 0..M-1.
/// Either family characterizes the structure function completely.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvthresh/system.hpp"

namespace mvthresh {

enum class BoundaryKind { kMinimalUpper, kMaximalLower };

std::string_view to_string(BoundaryKind kind);

/// Permutation class of boundary vectors: coordinates sorted descending,
/// plus the number of set members sharing that multiset of coordinates.
struct OrbitClass {
  StateVector representative;
  std::size_t count = 0;

  bool operator==(const OrbitClass&) const = default;
};

struct BoundaryVectorSet {
  int level = 0;
  BoundaryKind kind = BoundaryKind::kMinimalUpper;
  std::vector<StateVector> vectors;  // lexicographically descending
  std::vector<OrbitClass> orbits;    // representatives descending

  std::size_t size() const { return vectors.size(); }
};

/// Groups vectors by sorted coordinates. Only meaningful for symmetric
/// systems, but always computed.
std::vector<OrbitClass> orbit_summary(std::span<const StateVector> vectors);

/// theta(j) for 1 <= j <= M, by an immediate-predecessor scan of the lattice.
BoundaryVectorSet enumerate_muvs(const SystemSpec& spec, int j,
                                 std::uint64_t state_cap = kDefaultStateCap);

/// sigma(j) for 0 <= j <= M-1, by the dual immediate-successor scan.
BoundaryVectorSet enumerate_mlvs(const SystemSpec& spec, int j,
                                 std::uint64_t state_cap = kDefaultStateCap);

struct BoundaryVerdict {
  bool ok = true;
  std::string message;
  std::optional<StateVector> offending;
};

/// Independent re-check against the definitions: full down-cone (up-cone)
/// scan for minimality (maximality), membership of every vector in its level
/// set, and coverage of every state of the level set.
BoundaryVerdict verify_boundary_minimality(const SystemSpec& spec, const BoundaryVectorSet& set,
                                           std::uint64_t state_cap = kDefaultStateCap);

struct BinaryImageReport {
  std::vector<bool> per_level;  // index j = 1..M; index 0 unused (true)
  bool overall = true;
};

/// Level j is binary-imaged iff every MUV of theta(j) has coordinates in
/// {0, j} and every MLV of sigma(j-1) has coordinate k in {j-1, m_k}.
/// Sets are looked up by level; a missing set counts as a failure.
BinaryImageReport check_binary_imaged(const SystemSpec& spec,
                                      std::span<const BoundaryVectorSet> muvs_per_level,
                                      std::span<const BoundaryVectorSet> mlvs_per_level);

}  // namespace mvthresh
