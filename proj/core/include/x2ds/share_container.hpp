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

// Share file (.x2ds) layout, all integers big-endian:
//
//   offset  size  field
//   0       4     magic "X2DS"
//   4       1     version (1)
//   5       1     route index i (1..3)
//   6       1     base station index j (1..3)
//   7       8     original secret length, bits
//   15      8     payload length, bits
//   23      n     payload, ceil(payload_length / 8) bytes, MSB first,
//                 unused low bits of the last byte zero
//
// The manifest (manifest.x2dm) is a JSON document:
//
//   {"version": 1, "original_length_bits": N,
//    "shares": [{"i": 1, "j": 1, "path": "share_i1_j1.x2ds"}, ...],
//    "digest": "sha256:<hex>"}          // optional, off by default
//
// Pads never appear in either format.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "x2ds/bit_string.hpp"
#include "x2ds/codec.hpp"
#include "x2ds/position.hpp"

namespace x2ds {

inline constexpr std::array<std::uint8_t, 4> kShareMagic{'X', '2', 'D', 'S'};
inline constexpr std::uint8_t kShareVersion = 1;
inline constexpr std::size_t kShareHeaderSize = 23;
inline constexpr int kManifestVersion = 1;
inline constexpr const char* kManifestFileName = "manifest.x2dm";

struct ShareRecord {
  BitString share;
  Position position;
  std::uint64_t original_length = 0;
};

std::vector<std::uint8_t> write_share(const BitString& share, Position position,
                                      std::uint64_t original_length);

// Strict parse: the buffer must hold exactly one share. Throws
// ShareFormatError.
ShareRecord read_share(std::span<const std::uint8_t> bytes);

// "share_i<i>_j<j>.x2ds"
std::string share_file_name(Position position);

void write_share_file(const std::filesystem::path& path, const BitString& share,
                      Position position, std::uint64_t original_length);
ShareRecord read_share_file(const std::filesystem::path& path);

struct ManifestEntry {
  Position position;
  std::string path;
};

struct Manifest {
  int version = kManifestVersion;
  std::uint64_t original_length_bits = 0;
  std::vector<ManifestEntry> shares;
  // "sha256:<hex>" of the secret's packed bytes. Publishing it reveals a
  // function of the secret, so it is only written on request.
  std::optional<std::string> digest;

  std::string to_text() const;
  static Manifest parse(const std::string& text);
};

// Algorithm-tagged digest over the packed bytes of `secret`.
std::string secret_digest(const BitString& secret);

void write_manifest_file(const std::filesystem::path& path, const Manifest& manifest);
Manifest read_manifest_file(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace x2ds
