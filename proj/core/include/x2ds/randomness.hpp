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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "x2ds/bit_string.hpp"
#include "x2ds/codec.hpp"

namespace x2ds {

enum class PadSourceKind { kSecure, kSeededTest };

// Where pads come from. kSecure reads the kernel CSPRNG (getrandom). kSeededTest
// is a std::mt19937_64 stream: reproducible, not secret, and refused by
// ProductionGate unless insecure test mode is on.
//
// A seeded source is a stateful stream; use one instance per caller.
class PadSource {
 public:
  static PadSource secure();
  static PadSource seeded_test(std::uint64_t seed);

  PadSourceKind kind() const noexcept { return kind_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  void fill(std::span<std::uint8_t> out);
  BitString draw(std::size_t bit_count);

 private:
  explicit PadSource(PadSourceKind kind) : kind_(kind) {}

  PadSourceKind kind_;
  std::optional<std::uint64_t> seed_;
  std::mt19937_64 engine_;
};

PadSet1 generate_pads1(std::size_t half_length, PadSource& src);
PadSet2 generate_pads2(std::size_t half_length, PadSource& src);

// Name of the environment variable that enables insecure test mode.
inline constexpr const char* kInsecureTestEnv = "X2DS_INSECURE_TEST";

// True when the flag is set or X2DS_INSECURE_TEST=1.
bool insecure_test_mode_requested(bool flag);

// Admission check for production paths such as file encoding.
class ProductionGate {
 public:
  explicit ProductionGate(bool insecure_test_mode) : insecure_(insecure_test_mode) {}

  static ProductionGate from_environment(bool flag) {
    return ProductionGate(insecure_test_mode_requested(flag));
  }

  bool insecure_test_mode() const noexcept { return insecure_; }

  // Throws InsecureSourceRefused for a seeded source without test mode.
  void admit(const PadSource& src) const;

 private:
  bool insecure_;
};

// Exhaustive enumeration of pad assignments for the privacy audit.
//
// Assignment number `index` is read as a (pad_count * half_length)-bit
// integer, most significant bit first, and cut into pad_count pads of
// half_length bits: R1 takes the top bits, the last pad the bottom ones.
// Indices 0 .. size()-1 cover every assignment exactly once.
class PadEnumerator {
 public:
  // Largest total pad width that will be enumerated.
  static constexpr std::size_t kMaxTotalBits = 32;

  PadEnumerator(std::size_t half_length, std::size_t pad_count);

  std::uint64_t size() const noexcept { return std::uint64_t{1} << total_bits(); }
  std::size_t half_length() const noexcept { return half_length_; }
  std::size_t pad_count() const noexcept { return pad_count_; }

  // Pad k (1-based) of assignment `index`.
  BitString pad(std::uint64_t index, std::size_t k) const;

  PadSet1 pads1(std::uint64_t index) const;
  PadSet2 pads2(std::uint64_t index) const;

 private:
  std::size_t total_bits() const noexcept { return half_length_ * pad_count_; }

  std::size_t half_length_;
  std::size_t pad_count_;
};

}  // namespace x2ds
