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

#include "mvthresh/probability.hpp"

namespace mvthresh {

std::string_view to_string(Perspective perspective) {
  return perspective == Perspective::kSuccess ? "success" : "failure";
}

Perspective parse_perspective(std::string_view name) {
  if (name == "success") return Perspective::kSuccess;
  if (name == "failure") return Perspective::kFailure;
  throw ParseError("unknown perspective \"" + std::string(name) + "\" (expected success or failure)");
}

}  // namespace mvthresh
