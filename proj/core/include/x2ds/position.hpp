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
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace x2ds {

// Grid dimensions are fixed: three base stations, three routes.
inline constexpr int kGridSize = 3;

inline constexpr bool index_in_range(int index) noexcept {
  return index >= 1 && index <= kGridSize;
}

// Cell of the share matrix. `route` is the row i, `bs` the column j; both
// 1-based.
struct Position {
  int route = 1;
  int bs = 1;

  constexpr Position() = default;
  constexpr Position(int route_index, int bs_index)
      : route(route_index), bs(bs_index) {
    if (!index_in_range(route_index) || !index_in_range(bs_index)) {
      throw std::out_of_range("grid index out of range (expected 1..3)");
    }
  }

  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

// The jammed (or observed) route r and base station c. Same shape as a
// Position but names a whole row and a whole column.
struct FailurePattern {
  int route = 1;
  int bs = 1;

  constexpr FailurePattern() = default;
  constexpr FailurePattern(int route_index, int bs_index)
      : route(route_index), bs(bs_index) {
    if (!index_in_range(route_index) || !index_in_range(bs_index)) {
      throw std::out_of_range("failure pattern index out of range (expected 1..3)");
    }
  }

  friend constexpr auto operator<=>(const FailurePattern&,
                                    const FailurePattern&) = default;
};

// All nine patterns in the order (1,1), (2,1), (3,1), (1,2), ... so that the
// k-th entry is privacy case k+1.
inline constexpr std::array<FailurePattern, 9> all_failure_patterns() {
  std::array<FailurePattern, 9> out{};
  int k = 0;
  for (int c = 1; c <= kGridSize; ++c) {
    for (int r = 1; r <= kGridSize; ++r) {
      out[k++] = FailurePattern(r, c);
    }
  }
  return out;
}

inline constexpr int case_number(FailurePattern p) noexcept {
  return (p.bs - 1) * kGridSize + p.route;
}

inline std::string to_string(Position p) {
  return "(" + std::to_string(p.route) + "," + std::to_string(p.bs) + ")";
}

inline std::string to_string(FailurePattern p) {
  return "(" + std::to_string(p.route) + "," + std::to_string(p.bs) + ")";
}

inline std::ostream& operator<<(std::ostream& os, Position p) {
  return os << to_string(p);
}

inline std::ostream& operator<<(std::ostream& os, FailurePattern p) {
  return os << to_string(p);
}

}  // namespace x2ds
