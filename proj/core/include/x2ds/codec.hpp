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

// Encode/decode kernels for the one-layer (three-share) and two-layer (3x3)
// XOR secret-sharing schemes.
//
// One layer: the padded secret S = S1 || S2 and two pads R1, R2 give
//
//   E1 = (S2 ^ R2) || R1
//   E2 = (S1 ^ R1) || R2
//   E3 = (S1 ^ R2) || (S2 ^ R1)
//
// and any two of E1..E3 recover S. Two layers: the intermediate E_j is
// encoded again with pads (R3,R4), (R5,R6), (R7,R8), and the resulting
// column goes out through base station j, row i through route i. Losing one
// whole row and one whole column still leaves a recoverable 2x2 sub-grid.
//
// All functions are pure. Indices are 1-based throughout.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "x2ds/bit_string.hpp"
#include "x2ds/position.hpp"

namespace x2ds {

// Secret after zero-padding to even length.
struct PaddedSecret {
  BitString payload;
  std::size_t original_length = 0;
};

// Padded length for a secret of `original_length` bits: one zero bit is
// appended when the length is odd.
constexpr std::size_t padded_length(std::size_t original_length) noexcept {
  return original_length + (original_length % 2);
}

struct SplitSecret {
  PaddedSecret padded;
  BitString s1;
  BitString s2;
};

// Encoder-private pads. No serialization or stream operators exist for
// these types on purpose; they must not leave the encoder.
struct PadSet1 {
  BitString r1;
  BitString r2;
};

struct PadSet2 {
  std::array<BitString, 8> r;

  // R_k for k in 1..8.
  const BitString& at(int k) const { return r.at(static_cast<std::size_t>(k - 1)); }
  BitString& at(int k) { return r.at(static_cast<std::size_t>(k - 1)); }

  // The pad pair used by the second layer for base station `bs`.
  PadSet1 column_pads(int bs) const { return {at(2 * bs + 1), at(2 * bs + 2)}; }
  PadSet1 first_layer_pads() const { return {at(1), at(2)}; }
};

struct OneLayerShares {
  std::array<BitString, 3> e;

  const BitString& at(int j) const { return e.at(static_cast<std::size_t>(j - 1)); }
};

class ShareMatrix {
 public:
  ShareMatrix() = default;
  explicit ShareMatrix(std::size_t original_length) : original_length_(original_length) {}

  const BitString& at(int route, int bs) const { return cell(route, bs); }
  const BitString& at(Position p) const { return cell(p.route, p.bs); }
  BitString& at(int route, int bs) { return cell(route, bs); }
  BitString& at(Position p) { return cell(p.route, p.bs); }

  std::size_t original_length() const noexcept { return original_length_; }
  std::size_t share_length() const noexcept { return cells_[0][0].size(); }

  friend bool operator==(const ShareMatrix&, const ShareMatrix&) = default;

 private:
  std::array<std::array<BitString, 3>, 3> cells_;
  std::size_t original_length_ = 0;

  BitString& cell(int route, int bs) {
    return cells_.at(static_cast<std::size_t>(route - 1)).at(static_cast<std::size_t>(bs - 1));
  }
  const BitString& cell(int route, int bs) const {
    return cells_.at(static_cast<std::size_t>(route - 1)).at(static_cast<std::size_t>(bs - 1));
  }
};

// Shares keyed by grid position.
using ShareSet = std::map<Position, BitString>;

// The four shares left when route r and base station c are lost.
struct DecodingSet {
  ShareSet entries;
};

SplitSecret split_secret(const BitString& secret);

// First `original_length` bits of s1 || s2.
BitString join_secret(const BitString& s1, const BitString& s2, std::size_t original_length);

OneLayerShares enc1(const BitString& payload, const PadSet1& pads);

// Recovers the payload from shares with distinct indices in 1..3; argument
// order does not matter.
BitString dec1(int first_index, const BitString& first, int second_index, const BitString& second);

// Two-layer encoding as composition: enc1 on the payload, then enc1 on each
// intermediate share.
ShareMatrix enc2(const PaddedSecret& padded, const PadSet2& pads);

// The same matrix built cell by cell from the expanded closed forms. Kept as
// an independent route for equivalence checks.
ShareMatrix enc2_closed_form(const PaddedSecret& padded, const PadSet2& pads);

// Splits, pads and encodes a raw secret.
ShareMatrix encode_secret(const BitString& secret, const PadSet2& pads);

DecodingSet build_decoding_set(const ShareMatrix& matrix, FailurePattern failure);

// Two-layer decode of exactly the shares {(i,j) : i != r, j != c}.
BitString dec2(const DecodingSet& ds, FailurePattern failure, std::size_t original_length);

// Recovers the pads of a one-layer encoding from the payload and any one of
// its shares. Used to re-encode and cross-check redundant shares.
PadSet1 recover_pads1(int index, const BitString& share, const BitString& payload);

struct Reconstruction {
  BitString secret;
  // The row and column whose loss the chosen sub-grid tolerates.
  FailurePattern tolerated;
  // Positions that were redundant and checked against the reconstruction.
  std::vector<Position> verified;
};

// Decodes whatever subset of the matrix survived.
//
// Picks the lowest-index full 2x2 sub-grid (row pairs in order (1,2), (1,3),
// (2,3), and for each row pair the column pairs in the same order), runs
// dec2 on it, then re-encodes and compares every other supplied share.
// Throws InsufficientShares when no full sub-grid exists and
// InconsistentShares when a redundant share disagrees.
Reconstruction decode_available(const ShareSet& shares, std::size_t original_length);

}  // namespace x2ds
