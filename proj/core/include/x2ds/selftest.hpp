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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "x2ds/bit_string.hpp"
#include "x2ds/codec.hpp"

namespace x2ds {

// Embedded golden data: the worked 4-bit instance and the byte image of
// one share file.
struct SelftestFixture {
  BitString secret;
  PadSet2 pads;
  // expected[i-1][j-1] is m[i][j].
  std::array<std::array<BitString, 3>, 3> expected;
  FailurePattern failure;
  std::vector<std::uint8_t> golden_share_bytes;
};

SelftestFixture default_selftest_fixture();

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestResult {
  std::vector<SelftestCheck> checks;

  bool passed() const;
  std::string summary() const;
};

// Runs the golden fixtures, then the exhaustive 2-bit availability and
// privacy suites.
SelftestResult run_selftest(const SelftestFixture& fixture = default_selftest_fixture());

}  // namespace x2ds
