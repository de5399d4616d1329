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

/// @file rational.hpp
/// Exact rational arithmetic used for weights, thresholds and probabilities.
#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mvthresh {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "7", "-3", "2/6" or a plain decimal such as "0.125" or "1e-3"
/// into an exact rational. Throws ParseError on malformed text.
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& value);

}  // namespace mvthresh
