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

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <string>

#include "json.hpp"
#include "test_util.hpp"
#include "x2ds/errors.hpp"

namespace x2ds {
namespace {

namespace fs = std::filesystem;
using Bytes = std::vector<std::uint8_t>;

const Bytes kGolden1110 = {
    'X', '2', 'D', 'S', 0x01, 0x01, 0x01,  //
    0, 0, 0, 0, 0, 0, 0, 0x04,             //
    0, 0, 0, 0, 0, 0, 0, 0x04,             //
    0xE0,
};

std::string error_of(const Bytes& bytes) {
  try {
    read_share(bytes);
  } catch (const ShareFormatError& e) {
    return e.what();
  }
  return "";
}

TEST(WriteShare, GoldenBytes) {
  EXPECT_EQ(write_share(BitString::parse("1110"), Position(1, 1), 4), kGolden1110);
}

TEST(WriteShare, EmptyShare) {
  const Bytes bytes = write_share(BitString(), Position(3, 3), 0);
  const Bytes expected = {'X', '2', 'D', 'S', 0x01, 0x03, 0x03, 0, 0, 0, 0, 0, 0,
                          0,   0,   0,   0,   0,    0,    0,    0, 0, 0};
  EXPECT_EQ(bytes, expected);
  const ShareRecord rec = read_share(bytes);
  EXPECT_TRUE(rec.share.empty());
  EXPECT_EQ(rec.position, Position(3, 3));
}

TEST(WriteShare, MultiByteBigEndian) {
  BitString share(0x0102 * 2);
  const Bytes bytes = write_share(share, Position(2, 3), 0x0203);
  EXPECT_EQ(bytes[13], 0x02);
  EXPECT_EQ(bytes[14], 0x03);
  EXPECT_EQ(bytes[21], 0x02);
  EXPECT_EQ(bytes[22], 0x04);
  EXPECT_EQ(bytes.size(), kShareHeaderSize + (0x0204 + 7) / 8);
}

TEST(WriteShare, Errors) {
  EXPECT_THROW(write_share(BitString::parse("111"), Position(1, 1), 3), LengthMismatch);
  EXPECT_THROW(write_share(BitString::parse("1110"), Position(1, 1), 2), LengthMismatch);
}

TEST(ReadShare, RoundTripProperty) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t original = rng() % 300;
    const BitString share = testing::random_bits(rng, padded_length(original));
    const Position pos(1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3));
    const Bytes bytes = write_share(share, pos, original);
    ASSERT_EQ(bytes.size(), kShareHeaderSize + (share.size() + 7) / 8);
    const ShareRecord rec = read_share(bytes);
    ASSERT_EQ(rec.share, share);
    ASSERT_EQ(rec.position, pos);
    ASSERT_EQ(rec.original_length, original);
    ASSERT_EQ(write_share(rec.share, rec.position, rec.original_length), bytes);
  }
}

TEST(ReadShare, BadMagic) {
  Bytes b = kGolden1110;
  b[0] = 'Y';
  EXPECT_EQ(error_of(b), "bad magic");
  EXPECT_EQ(error_of({}), "bad magic");
}

TEST(ReadShare, UnsupportedVersion) {
  Bytes b = kGolden1110;
  b[4] = 2;
  EXPECT_EQ(error_of(b), "unsupported version 2");
}

TEST(ReadShare, Truncated) {
  Bytes b = kGolden1110;
  b.pop_back();
  EXPECT_EQ(error_of(b), "truncated payload");
  EXPECT_EQ(error_of(Bytes(kGolden1110.begin(), kGolden1110.begin() + 10)), "truncated header");
}

TEST(ReadShare, TrailingGarbage) {
  Bytes b = kGolden1110;
  b.push_back(0);
  EXPECT_EQ(error_of(b), "trailing data after payload");
}

TEST(ReadShare, IndexOutOfRange) {
  Bytes b = kGolden1110;
  b[5] = 4;
  EXPECT_EQ(error_of(b), "index out of range");
  b = kGolden1110;
  b[6] = 0;
  EXPECT_EQ(error_of(b), "index out of range");
}

TEST(ReadShare, NonzeroPadBits) {
  Bytes b = kGolden1110;
  b.back() = 0xE1;
  EXPECT_EQ(error_of(b), "nonzero pad bits in final byte");
}

TEST(ReadShare, LengthFieldsDisagree) {
  Bytes b = kGolden1110;
  b[14] = 0x02;  // original length 2, payload 4
  EXPECT_FALSE(error_of(b).empty());
  b = kGolden1110;
  b[22] = 0x03;  // odd payload length
  EXPECT_EQ(error_of(b), "odd payload length");
}

class ShareFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("x2ds_share_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(ShareFiles, FileRoundTrip) {
  const fs::path path = dir_ / share_file_name(Position(2, 3));
  EXPECT_EQ(path.filename(), "share_i2_j3.x2ds");
  write_share_file(path, BitString::parse("101100"), Position(2, 3), 5);
  const ShareRecord rec = read_share_file(path);
  EXPECT_EQ(rec.share, BitString::parse("101100"));
  EXPECT_EQ(rec.original_length, 5u);
  EXPECT_THROW(read_share_file(dir_ / "absent.x2ds"), IoError);
}

TEST_F(ShareFiles, ManifestRoundTrip) {
  Manifest m;
  m.original_length_bits = 24;
  m.shares.push_back({Position(1, 1), "share_i1_j1.x2ds"});
  m.shares.push_back({Position(3, 2), "share_i3_j2.x2ds"});
  const fs::path path = dir_ / kManifestFileName;
  write_manifest_file(path, m);
  const Manifest back = read_manifest_file(path);
  EXPECT_EQ(back.version, 1);
  EXPECT_EQ(back.original_length_bits, 24u);
  ASSERT_EQ(back.shares.size(), 2u);
  EXPECT_EQ(back.shares[1].position, Position(3, 2));
  EXPECT_EQ(back.shares[1].path, "share_i3_j2.x2ds");
  EXPECT_FALSE(back.digest.has_value());

  const auto doc = nlohmann::json::parse(m.to_text());
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"original_length_bits", "shares", "version"}));
  for (const auto& item : doc.at("shares")[0].items()) {
    EXPECT_TRUE(item.key() == "i" || item.key() == "j" || item.key() == "path");
  }
}

TEST(Manifest, DigestIsOptionalAndTagged) {
  Manifest m;
  m.digest = secret_digest(BitString::from_bytes(Bytes{'a', 'b', 'c'}));
  EXPECT_EQ(*m.digest,
            "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(Manifest::parse(m.to_text()).digest, m.digest);
}

TEST(Manifest, RejectsBadInput) {
  EXPECT_THROW(Manifest::parse("not json"), ShareFormatError);
  EXPECT_THROW(Manifest::parse(R"({"version": 2, "original_length_bits": 0, "shares": []})"),
               ShareFormatError);
  EXPECT_THROW(Manifest::parse(R"({"version": 1, "original_length_bits": 0,
                                   "shares": [{"i": 1, "j": 1, "path": "a"},
                                              {"i": 1, "j": 1, "path": "b"}]})"),
               ShareFormatError);
  EXPECT_THROW(Manifest::parse(R"({"version": 1, "original_length_bits": 0,
                                   "shares": [{"i": 4, "j": 1, "path": "a"}]})"),
               ShareFormatError);
}

}  // namespace
}  // namespace x2ds
