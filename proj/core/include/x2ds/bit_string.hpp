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
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace x2ds {

// A bit sequence of explicit length.
//
// Storage is packed MSB-first: bit 0 is the high bit of byte 0. Bits past
// size() in the final byte are always zero, so two BitStrings compare equal
// exactly when their lengths and visible bits agree, and bytes() can be
// written to disk as-is.
//
// slice/concat/xor run whole bytes at a time. The functions in
// x2ds::reference do the same work one bit at a time and exist to check the
// fast path.
class BitString {
 public:
  BitString() = default;

  // All-zero string of `bit_count` bits.
  explicit BitString(std::size_t bit_count);

  // Packs `bytes` as a string of `bit_count` bits. Requires exactly
  // ceil(bit_count / 8) bytes with zero trailing bits.
  static BitString from_bytes(std::span<const std::uint8_t> bytes,
                              std::size_t bit_count);

  // Every byte of `bytes`, 8 bits each.
  static BitString from_bytes(std::span<const std::uint8_t> bytes);

  // Parses a string of '0' / '1' characters.
  static BitString parse(std::string_view text);

  // The low `bit_count` bits of `value`, most significant first.
  static BitString from_uint(std::uint64_t value, std::size_t bit_count);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool bit(std::size_t index) const;
  void set_bit(std::size_t index, bool value);

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

  // Requires size() <= 64.
  std::uint64_t to_uint() const;
  std::string to_string() const;

  // Bits [offset, offset + count).
  BitString slice(std::size_t offset, std::size_t count) const;

  // Splits an even-length string into its two halves.
  std::pair<BitString, BitString> halves() const;

  BitString& operator^=(const BitString& other);

  friend BitString operator^(BitString lhs, const BitString& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;

  void clear_tail() noexcept;

  friend BitString concat(const BitString& head, const BitString& tail);
};

BitString concat(const BitString& head, const BitString& tail);

std::ostream& operator<<(std::ostream& os, const BitString& bits);

namespace reference {

// Bit-at-a-time counterparts of the BitString fast paths.
BitString slice(const BitString& bits, std::size_t offset, std::size_t count);
BitString concat(const BitString& head, const BitString& tail);
BitString bitwise_xor(const BitString& lhs, const BitString& rhs);

}  // namespace reference

}  // namespace x2ds
