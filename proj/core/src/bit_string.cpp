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

#include "x2ds/bit_string.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "x2ds/errors.hpp"

namespace x2ds {
namespace {

constexpr std::size_t byte_count(std::size_t bits) { return (bits + 7) / 8; }

constexpr std::uint8_t tail_mask(std::size_t bits) {
  // Mask of the visible bits in the final byte.
  const std::size_t used = bits % 8;
  return used == 0 ? 0xFF : static_cast<std::uint8_t>(0xFF << (8 - used));
}

}  // namespace

BitString::BitString(std::size_t bit_count)
    : bytes_(byte_count(bit_count), 0), size_(bit_count) {}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes,
                                std::size_t bit_count) {
  if (bytes.size() != byte_count(bit_count)) {
    throw LengthMismatch("byte buffer does not match bit length");
  }
  BitString out;
  out.bytes_.assign(bytes.begin(), bytes.end());
  out.size_ = bit_count;
  if (!out.bytes_.empty() && (out.bytes_.back() & ~tail_mask(bit_count)) != 0) {
    throw std::invalid_argument("nonzero bits past the end of the bit string");
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  return from_bytes(bytes, bytes.size() * 8);
}

BitString BitString::parse(std::string_view text) {
  BitString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.set_bit(i, true);
    } else if (text[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return out;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t bit_count) {
  if (bit_count > 64) throw std::invalid_argument("from_uint supports at most 64 bits");
  BitString out(bit_count);
  for (std::size_t i = 0; i < bit_count; ++i) {
    out.set_bit(i, (value >> (bit_count - 1 - i)) & 1U);
  }
  return out;
}

bool BitString::bit(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("bit index out of range");
  return (bytes_[index / 8] >> (7 - index % 8)) & 1U;
}

void BitString::set_bit(std::size_t index, bool value) {
  if (index >= size_) throw std::out_of_range("bit index out of range");
  const auto mask = static_cast<std::uint8_t>(0x80U >> (index % 8));
  if (value) {
    bytes_[index / 8] |= mask;
  } else {
    bytes_[index / 8] &= static_cast<std::uint8_t>(~mask);
  }
}

std::uint64_t BitString::to_uint() const {
  if (size_ > 64) throw std::invalid_argument("to_uint supports at most 64 bits");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < size_; ++i) value = (value << 1) | bit(i);
  return value;
}

std::string BitString::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

void BitString::clear_tail() noexcept {
  if (!bytes_.empty()) bytes_.back() &= tail_mask(size_);
}

BitString BitString::slice(std::size_t offset, std::size_t count) const {
  if (offset > size_ || count > size_ - offset) {
    throw std::out_of_range("slice out of range");
  }
  BitString out(count);
  if (count == 0) return out;

  const std::size_t first = offset / 8;
  const unsigned shift = offset % 8;
  const std::size_t n = out.bytes_.size();
  if (shift == 0) {
    std::memcpy(out.bytes_.data(), bytes_.data() + first, n);
  } else {
    const std::size_t available = bytes_.size() - first;
    for (std::size_t k = 0; k < n; ++k) {
      const unsigned hi = bytes_[first + k];
      const unsigned lo = (k + 1 < available) ? bytes_[first + k + 1] : 0U;
      out.bytes_[k] = static_cast<std::uint8_t>((hi << shift) | (lo >> (8 - shift)));
    }
  }
  out.clear_tail();
  return out;
}

std::pair<BitString, BitString> BitString::halves() const {
  if (size_ % 2 != 0) throw LengthMismatch("cannot halve an odd-length bit string");
  const std::size_t half = size_ / 2;
  return {slice(0, half), slice(half, half)};
}

BitString& BitString::operator^=(const BitString& other) {
  if (size_ != other.size_) throw LengthMismatch("XOR operands differ in length");
  // Tail bits are zero in both operands, so whole-byte XOR keeps them zero.
  for (std::size_t k = 0; k < bytes_.size(); ++k) bytes_[k] ^= other.bytes_[k];
  return *this;
}

BitString concat(const BitString& head, const BitString& tail) {
  BitString out;
  out.size_ = head.size_ + tail.size_;
  out.bytes_.reserve(byte_count(out.size_));
  out.bytes_.assign(head.bytes_.begin(), head.bytes_.end());

  const unsigned used = head.size_ % 8;
  if (used == 0) {
    out.bytes_.insert(out.bytes_.end(), tail.bytes_.begin(), tail.bytes_.end());
  } else {
    // Tail byte k straddles the boundary: its high part fills the open slot
    // of the previous output byte, its low part starts the next one.
    for (const std::uint8_t b : tail.bytes_) {
      out.bytes_.back() |= static_cast<std::uint8_t>(b >> used);
      out.bytes_.push_back(static_cast<std::uint8_t>(b << (8 - used)));
    }
    out.bytes_.resize(byte_count(out.size_));
  }
  out.clear_tail();
  return out;
}

std::ostream& operator<<(std::ostream& os, const BitString& bits) {
  return os << bits.to_string();
}

namespace reference {

BitString slice(const BitString& bits, std::size_t offset, std::size_t count) {
  if (offset > bits.size() || count > bits.size() - offset) {
    throw std::out_of_range("slice out of range");
  }
  BitString out(count);
  for (std::size_t i = 0; i < count; ++i) out.set_bit(i, bits.bit(offset + i));
  return out;
}

BitString concat(const BitString& head, const BitString& tail) {
  BitString out(head.size() + tail.size());
  for (std::size_t i = 0; i < head.size(); ++i) out.set_bit(i, head.bit(i));
  for (std::size_t i = 0; i < tail.size(); ++i) {
    out.set_bit(head.size() + i, tail.bit(i));
  }
  return out;
}

BitString bitwise_xor(const BitString& lhs, const BitString& rhs) {
  if (lhs.size() != rhs.size()) throw LengthMismatch("XOR operands differ in length");
  BitString out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out.set_bit(i, lhs.bit(i) != rhs.bit(i));
  return out;
}

}  // namespace reference
}  // namespace x2ds
