// Copyright 2026 The x2ds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "x2ds/position.hpp"

namespace x2ds {

// Operand lengths disagree (XOR of unequal strings, pads that do not match
// the payload halves, shares of different sizes).
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Fewer shares than any 2x2 sub-grid requires.
class InsufficientShares : public std::runtime_error {
 public:
  InsufficientShares(const std::string& what, std::vector<Position> missing)
      : std::runtime_error(what), missing_(std::move(missing)) {}

  const std::vector<Position>& missing() const noexcept { return missing_; }

 private:
  std::vector<Position> missing_;
};

// A redundant share disagrees with the reconstruction, or share metadata
// disagrees across the supplied set.
class InconsistentShares : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShareFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EntropySourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A seeded (reproducible) pad source was offered to a production path
// without the insecure test-mode gate.
class InsecureSourceRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive audit requested beyond the enumeration bound.
class TractabilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace x2ds
