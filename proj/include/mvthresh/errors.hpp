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

/// @file errors.hpp
/// Exception types raised by the analysis routines.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mvthresh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A system definition violates one or more structural invariants.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive scan would exceed the configured state-space cap.
class StateSpaceTooLarge : public Error {
 public:
  StateSpaceTooLarge(std::uint64_t required, std::uint64_t cap)
      : Error("state space of " + std::to_string(required) +
              " states exceeds the cap of " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

class StateOutOfRange : public Error {
 public:
  using Error::Error;
};

class LevelOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Expectation was requested for an expression whose terms overlap.
class NotPre : public Error {
 public:
  using Error::Error;
};

/// Malformed distribution, expression text or definition file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvthresh
