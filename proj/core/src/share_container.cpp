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

#include "x2ds/share_container.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>

#include "json.hpp"
#include "x2ds/errors.hpp"

namespace x2ds {
namespace {

void put_u64(std::uint8_t* out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in) {
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < 8; ++k) v = (v << 8) | in[k];
  return v;
}

}  // namespace

std::vector<std::uint8_t> write_share(const BitString& share, Position position,
                                      std::uint64_t original_length) {
  if (share.size() % 2 != 0) throw LengthMismatch("share length must be even");
  if (padded_length(original_length) != share.size()) {
    throw LengthMismatch("share length does not match the padded secret length");
  }
  const auto payload = share.bytes();
  std::vector<std::uint8_t> out(kShareHeaderSize + payload.size());
  std::copy(kShareMagic.begin(), kShareMagic.end(), out.begin());
  out[4] = kShareVersion;
  out[5] = static_cast<std::uint8_t>(position.route);
  out[6] = static_cast<std::uint8_t>(position.bs);
  put_u64(out.data() + 7, original_length);
  put_u64(out.data() + 15, share.size());
  std::copy(payload.begin(), payload.end(), out.begin() + kShareHeaderSize);
  return out;
}

ShareRecord read_share(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kShareMagic.size() ||
      !std::equal(kShareMagic.begin(), kShareMagic.end(), bytes.begin())) {
    throw ShareFormatError("bad magic");
  }
  if (bytes.size() < kShareHeaderSize) throw ShareFormatError("truncated header");
  if (bytes[4] != kShareVersion) {
    throw ShareFormatError("unsupported version " + std::to_string(bytes[4]));
  }
  const int route = bytes[5];
  const int bs = bytes[6];
  if (!index_in_range(route) || !index_in_range(bs)) {
    throw ShareFormatError("index out of range");
  }
  const std::uint64_t original_length = get_u64(bytes.subspan(7, 8));
  const std::uint64_t payload_bits = get_u64(bytes.subspan(15, 8));
  if (payload_bits % 2 != 0) throw ShareFormatError("odd payload length");
  if (original_length > payload_bits || padded_length(original_length) != payload_bits) {
    throw ShareFormatError("payload length does not match the original secret length");
  }
  const std::uint64_t payload_bytes = payload_bits / 8 + (payload_bits % 8 != 0 ? 1 : 0);
  const std::size_t available = bytes.size() - kShareHeaderSize;
  if (available < payload_bytes) throw ShareFormatError("truncated payload");
  if (available > payload_bytes) throw ShareFormatError("trailing data after payload");

  const auto payload = bytes.subspan(kShareHeaderSize);
  if (payload_bits % 8 != 0) {
    const auto mask = static_cast<std::uint8_t>(0xFF >> (payload_bits % 8));
    if ((payload.back() & mask) != 0) throw ShareFormatError("nonzero pad bits in final byte");
  }

  ShareRecord record;
  record.share = BitString::from_bytes(payload, payload_bits);
  record.position = Position(route, bs);
  record.original_length = original_length;
  return record;
}

std::string share_file_name(Position position) {
  return "share_i" + std::to_string(position.route) + "_j" + std::to_string(position.bs) + ".x2ds";
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for " + path.string());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

void write_share_file(const std::filesystem::path& path, const BitString& share,
                      Position position, std::uint64_t original_length) {
  write_file_bytes(path, write_share(share, position, original_length));
}

ShareRecord read_share_file(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  try {
    return read_share(bytes);
  } catch (const ShareFormatError& e) {
    throw ShareFormatError(path.string() + ": " + e.what());
  }
}

std::string Manifest::to_text() const {
  nlohmann::ordered_json doc;
  doc["version"] = version;
  doc["original_length_bits"] = original_length_bits;
  doc["shares"] = nlohmann::ordered_json::array();
  for (const auto& entry : shares) {
    doc["shares"].push_back(
        {{"i", entry.position.route}, {"j", entry.position.bs}, {"path", entry.path}});
  }
  if (digest) doc["digest"] = *digest;
  return doc.dump(2) + "\n";
}

Manifest Manifest::parse(const std::string& text) {
  Manifest m;
  try {
    const auto doc = nlohmann::json::parse(text);
    m.version = doc.at("version").get<int>();
    if (m.version != kManifestVersion) {
      throw ShareFormatError("unsupported manifest version " + std::to_string(m.version));
    }
    m.original_length_bits = doc.at("original_length_bits").get<std::uint64_t>();
    std::set<Position> seen;
    for (const auto& entry : doc.at("shares")) {
      const int i = entry.at("i").get<int>();
      const int j = entry.at("j").get<int>();
      if (!index_in_range(i) || !index_in_range(j)) {
        throw ShareFormatError("manifest share index out of range");
      }
      const Position pos(i, j);
      if (!seen.insert(pos).second) {
        throw ShareFormatError("manifest lists share " + to_string(pos) + " twice");
      }
      m.shares.push_back({pos, entry.at("path").get<std::string>()});
    }
    if (doc.contains("digest")) m.digest = doc.at("digest").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ShareFormatError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string secret_digest(const BitString& secret) {
  std::array<unsigned char, SHA256_DIGEST_LENGTH> md{};
  SHA256(secret.bytes().data(), secret.bytes().size(), md.data());
  std::string out = "sha256:";
  char hex[3];
  for (unsigned char b : md) {
    std::snprintf(hex, sizeof(hex), "%02x", b);
    out += hex;
  }
  return out;
}

void write_manifest_file(const std::filesystem::path& path, const Manifest& manifest) {
  const std::string text = manifest.to_text();
  write_file_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

Manifest read_manifest_file(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  return Manifest::parse(std::string(bytes.begin(), bytes.end()));
}

}  // namespace x2ds
