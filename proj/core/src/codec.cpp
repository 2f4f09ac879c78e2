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

#include "x2ds/codec.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "x2ds/errors.hpp"

namespace x2ds {
namespace {

constexpr std::array<std::pair<int, int>, 3> kIndexPairs{{{1, 2}, {1, 3}, {2, 3}}};

void require_pad_lengths(const BitString& payload, const PadSet1& pads) {
  if (payload.size() % 2 != 0) throw LengthMismatch("payload length must be even");
  const std::size_t half = payload.size() / 2;
  if (pads.r1.size() != half || pads.r2.size() != half) {
    throw LengthMismatch("pad length must equal half the payload length");
  }
}

}  // namespace

SplitSecret split_secret(const BitString& secret) {
  SplitSecret out;
  out.padded.original_length = secret.size();
  out.padded.payload = secret.size() % 2 == 0 ? secret : concat(secret, BitString(1));
  std::tie(out.s1, out.s2) = out.padded.payload.halves();
  return out;
}

BitString join_secret(const BitString& s1, const BitString& s2, std::size_t original_length) {
  if (s1.size() != s2.size()) throw LengthMismatch("secret halves differ in length");
  if (original_length > s1.size() + s2.size()) {
    throw std::out_of_range("original length exceeds the joined payload");
  }
  return concat(s1, s2).slice(0, original_length);
}

OneLayerShares enc1(const BitString& payload, const PadSet1& pads) {
  require_pad_lengths(payload, pads);
  const auto [s1, s2] = payload.halves();
  return {{concat(s2 ^ pads.r2, pads.r1),
           concat(s1 ^ pads.r1, pads.r2),
           concat(s1 ^ pads.r2, s2 ^ pads.r1)}};
}

BitString dec1(int first_index, const BitString& first, int second_index,
               const BitString& second) {
  if (!index_in_range(first_index) || !index_in_range(second_index)) {
    throw std::out_of_range("share index out of range (expected 1..3)");
  }
  if (first_index == second_index) throw std::invalid_argument("dec1 needs two distinct shares");
  if (first.size() != second.size()) throw LengthMismatch("shares differ in length");
  if (first.size() % 2 != 0) throw LengthMismatch("share length must be even");

  const BitString* by_index[3] = {nullptr, nullptr, nullptr};
  by_index[first_index - 1] = &first;
  by_index[second_index - 1] = &second;

  BitString s1;
  BitString s2;
  if (by_index[2] == nullptr) {
    const auto [e1a, e1b] = by_index[0]->halves();
    const auto [e2a, e2b] = by_index[1]->halves();
    s1 = e1b ^ e2a;
    s2 = e1a ^ e2b;
  } else if (by_index[1] == nullptr) {
    const auto [e1a, e1b] = by_index[0]->halves();
    const auto [e3a, e3b] = by_index[2]->halves();
    s2 = e1b ^ e3b;
    s1 = s2 ^ e1a ^ e3a;
  } else {
    const auto [e2a, e2b] = by_index[1]->halves();
    const auto [e3a, e3b] = by_index[2]->halves();
    s1 = e2b ^ e3a;
    s2 = s1 ^ e2a ^ e3b;
  }
  return concat(s1, s2);
}

ShareMatrix enc2(const PaddedSecret& padded, const PadSet2& pads) {
  const OneLayerShares intermediate = enc1(padded.payload, pads.first_layer_pads());
  ShareMatrix m(padded.original_length);
  for (int bs = 1; bs <= kGridSize; ++bs) {
    OneLayerShares column = enc1(intermediate.at(bs), pads.column_pads(bs));
    for (int route = 1; route <= kGridSize; ++route) {
      m.at(route, bs) = std::move(column.e[static_cast<std::size_t>(route - 1)]);
    }
  }
  return m;
}

ShareMatrix enc2_closed_form(const PaddedSecret& padded, const PadSet2& pads) {
  if (padded.payload.size() % 2 != 0) throw LengthMismatch("payload length must be even");
  const std::size_t half = padded.payload.size() / 2;
  for (const auto& r : pads.r) {
    if (r.size() != half) throw LengthMismatch("pad length must equal half the payload length");
  }
  const auto [s1, s2] = padded.payload.halves();
  const auto& r1 = pads.at(1);
  const auto& r2 = pads.at(2);
  const auto& r3 = pads.at(3);
  const auto& r4 = pads.at(4);
  const auto& r5 = pads.at(5);
  const auto& r6 = pads.at(6);
  const auto& r7 = pads.at(7);
  const auto& r8 = pads.at(8);

  ShareMatrix m(padded.original_length);
  m.at(1, 1) = concat(r1 ^ r4, r3);
  m.at(2, 1) = concat(s2 ^ r2 ^ r3, r4);
  m.at(3, 1) = concat(s2 ^ r2 ^ r4, r1 ^ r3);

  m.at(1, 2) = concat(r2 ^ r6, r5);
  m.at(2, 2) = concat(s1 ^ r1 ^ r5, r6);
  m.at(3, 2) = concat(s1 ^ r1 ^ r6, r2 ^ r5);

  m.at(1, 3) = concat(s2 ^ r1 ^ r8, r7);
  m.at(2, 3) = concat(s1 ^ r2 ^ r7, r8);
  m.at(3, 3) = concat(s1 ^ r2 ^ r8, s2 ^ r1 ^ r7);
  return m;
}

ShareMatrix encode_secret(const BitString& secret, const PadSet2& pads) {
  return enc2(split_secret(secret).padded, pads);
}

DecodingSet build_decoding_set(const ShareMatrix& matrix, FailurePattern failure) {
  DecodingSet ds;
  for (int route = 1; route <= kGridSize; ++route) {
    if (route == failure.route) continue;
    for (int bs = 1; bs <= kGridSize; ++bs) {
      if (bs == failure.bs) continue;
      ds.entries.emplace(Position(route, bs), matrix.at(route, bs));
    }
  }
  return ds;
}

BitString dec2(const DecodingSet& ds, FailurePattern failure, std::size_t original_length) {
  std::vector<int> rows;
  std::vector<int> cols;
  for (int k = 1; k <= kGridSize; ++k) {
    if (k != failure.route) rows.push_back(k);
    if (k != failure.bs) cols.push_back(k);
  }

  for (const auto& [pos, share] : ds.entries) {
    if (pos.route == failure.route || pos.bs == failure.bs) {
      throw std::invalid_argument("decoding set holds a share from the lost row or column " +
                                  to_string(pos));
    }
  }

  std::optional<std::size_t> length;
  auto fetch = [&](int route, int bs) -> const BitString& {
    const auto it = ds.entries.find(Position(route, bs));
    if (it == ds.entries.end()) {
      throw std::invalid_argument("decoding set is missing share " + to_string(Position(route, bs)));
    }
    if (length && *length != it->second.size()) {
      throw LengthMismatch("decoding set shares differ in length");
    }
    length = it->second.size();
    return it->second;
  };

  // Inner layer: each surviving column yields its intermediate share.
  std::array<BitString, 2> intermediate;
  for (std::size_t k = 0; k < 2; ++k) {
    const int bs = cols[k];
    intermediate[k] = dec1(rows[0], fetch(rows[0], bs), rows[1], fetch(rows[1], bs));
  }
  // Outer layer: the two intermediates yield the padded secret.
  const BitString payload = dec1(cols[0], intermediate[0], cols[1], intermediate[1]);
  if (original_length > payload.size() || padded_length(original_length) != payload.size()) {
    throw LengthMismatch("original length does not match the share length");
  }
  const auto [s1, s2] = payload.halves();
  return join_secret(s1, s2, original_length);
}

PadSet1 recover_pads1(int index, const BitString& share, const BitString& payload) {
  if (share.size() != payload.size()) throw LengthMismatch("share and payload differ in length");
  const auto [x1, x2] = share.halves();
  const auto [s1, s2] = payload.halves();
  switch (index) {
    case 1:
      return {x2, x1 ^ s2};
    case 2:
      return {x1 ^ s1, x2};
    case 3:
      return {x2 ^ s2, x1 ^ s1};
    default:
      throw std::out_of_range("share index out of range (expected 1..3)");
  }
}

Reconstruction decode_available(const ShareSet& shares, std::size_t original_length) {
  const std::size_t expected_length = padded_length(original_length);
  for (const auto& [pos, share] : shares) {
    if (share.size() != expected_length) {
      throw InconsistentShares("share " + to_string(pos) + " has length " +
                               std::to_string(share.size()) + ", expected " +
                               std::to_string(expected_length));
    }
  }

  auto present = [&](int route, int bs) { return shares.count(Position(route, bs)) != 0; };

  std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> grid;
  for (const auto& rows : kIndexPairs) {
    for (const auto& cols : kIndexPairs) {
      if (present(rows.first, cols.first) && present(rows.first, cols.second) &&
          present(rows.second, cols.first) && present(rows.second, cols.second)) {
        grid = {rows, cols};
        break;
      }
    }
    if (grid) break;
  }

  if (!grid) {
    std::vector<Position> missing;
    std::string list;
    for (int route = 1; route <= kGridSize; ++route) {
      for (int bs = 1; bs <= kGridSize; ++bs) {
        if (present(route, bs)) continue;
        missing.emplace_back(route, bs);
        list += (list.empty() ? "" : " ") + to_string(Position(route, bs));
      }
    }
    throw InsufficientShares(
        "insufficient shares: no two routes share two base stations; missing " + list,
        std::move(missing));
  }

  const auto [rows, cols] = *grid;
  const FailurePattern tolerated(6 - rows.first - rows.second, 6 - cols.first - cols.second);
  DecodingSet ds;
  for (int route : {rows.first, rows.second}) {
    for (int bs : {cols.first, cols.second}) {
      ds.entries.emplace(Position(route, bs), shares.at(Position(route, bs)));
    }
  }

  Reconstruction out;
  out.tolerated = tolerated;
  out.secret = dec2(ds, tolerated, original_length);

  // Re-derive every pad from the decoded payload and re-encode, so any
  // share outside the chosen sub-grid can be compared bit for bit. A column
  // with a single share cannot be checked: any value is consistent with
  // some pad pair.
  const BitString payload = split_secret(out.secret).padded.payload;
  const auto [first_pos, first_share] = *ds.entries.begin();
  const BitString first_intermediate =
      dec1(rows.first, shares.at(Position(rows.first, first_pos.bs)), rows.second,
           shares.at(Position(rows.second, first_pos.bs)));
  const OneLayerShares intermediate =
      enc1(payload, recover_pads1(first_pos.bs, first_intermediate, payload));

  for (int bs = 1; bs <= kGridSize; ++bs) {
    std::vector<int> column_rows;
    for (int route = 1; route <= kGridSize; ++route) {
      if (present(route, bs)) column_rows.push_back(route);
    }
    if (column_rows.size() < 2) continue;

    const BitString& anchor = shares.at(Position(column_rows[0], bs));
    const BitString column_intermediate =
        dec1(column_rows[0], anchor, column_rows[1], shares.at(Position(column_rows[1], bs)));
    if (column_intermediate != intermediate.at(bs)) {
      throw InconsistentShares("shares in base station column " + std::to_string(bs) +
                               " disagree with the reconstruction");
    }
    const OneLayerShares column =
        enc1(intermediate.at(bs), recover_pads1(column_rows[0], anchor, intermediate.at(bs)));
    for (int route : column_rows) {
      const Position pos(route, bs);
      if (column.at(route) != shares.at(pos)) {
        throw InconsistentShares("share " + to_string(pos) + " disagrees with the reconstruction");
      }
      if (!ds.entries.count(pos)) out.verified.push_back(pos);
    }
  }
  return out;
}

}  // namespace x2ds
