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

#include "x2ds/randomness.hpp"

#include <sys/random.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

#include "x2ds/errors.hpp"

namespace x2ds {

PadSource PadSource::secure() { return PadSource(PadSourceKind::kSecure); }

PadSource PadSource::seeded_test(std::uint64_t seed) {
  PadSource src(PadSourceKind::kSeededTest);
  src.seed_ = seed;
  src.engine_.seed(seed);
  return src;
}

void PadSource::fill(std::span<std::uint8_t> out) {
  if (kind_ == PadSourceKind::kSeededTest) {
    std::size_t k = 0;
    while (k < out.size()) {
      std::uint64_t word = engine_();
      for (int b = 0; b < 8 && k < out.size(); ++b, ++k) {
        out[k] = static_cast<std::uint8_t>(word);
        word >>= 8;
      }
    }
    return;
  }

  std::size_t done = 0;
  while (done < out.size()) {
    const ssize_t got = ::getrandom(out.data() + done, out.size() - done, 0);
    if (got < 0) {
      if (errno == EINTR) continue;
      throw EntropySourceError(std::string("getrandom failed: ") + std::strerror(errno));
    }
    done += static_cast<std::size_t>(got);
  }
}

BitString PadSource::draw(std::size_t bit_count) {
  std::vector<std::uint8_t> buf((bit_count + 7) / 8);
  fill(buf);
  if (bit_count % 8 != 0) {
    buf.back() &= static_cast<std::uint8_t>(0xFF << (8 - bit_count % 8));
  }
  return BitString::from_bytes(buf, bit_count);
}

PadSet1 generate_pads1(std::size_t half_length, PadSource& src) {
  PadSet1 pads;
  pads.r1 = src.draw(half_length);
  pads.r2 = src.draw(half_length);
  return pads;
}

PadSet2 generate_pads2(std::size_t half_length, PadSource& src) {
  PadSet2 pads;
  for (auto& r : pads.r) r = src.draw(half_length);
  return pads;
}

bool insecure_test_mode_requested(bool flag) {
  if (flag) return true;
  const char* env = std::getenv(kInsecureTestEnv);
  return env != nullptr && std::string_view(env) == "1";
}

void ProductionGate::admit(const PadSource& src) const {
  if (src.kind() == PadSourceKind::kSeededTest && !insecure_) {
    throw InsecureSourceRefused(
        "seeded pads are reproducible and not secret; pass --insecure-test-mode or set " +
        std::string(kInsecureTestEnv) + "=1 to allow them");
  }
}

PadEnumerator::PadEnumerator(std::size_t half_length, std::size_t pad_count)
    : half_length_(half_length), pad_count_(pad_count) {
  if (pad_count == 0) throw std::invalid_argument("pad enumerator needs at least one pad");
  if (half_length * pad_count > kMaxTotalBits) {
    throw TractabilityError("pad enumeration limited to " + std::to_string(kMaxTotalBits) +
                            " total bits");
  }
}

BitString PadEnumerator::pad(std::uint64_t index, std::size_t k) const {
  if (index >= size()) throw std::out_of_range("pad assignment index out of range");
  if (k < 1 || k > pad_count_) throw std::out_of_range("pad number out of range");
  const std::size_t shift = (pad_count_ - k) * half_length_;
  const std::uint64_t mask = half_length_ == 0 ? 0 : (std::uint64_t{1} << half_length_) - 1;
  return BitString::from_uint((index >> shift) & mask, half_length_);
}

PadSet1 PadEnumerator::pads1(std::uint64_t index) const {
  if (pad_count_ != 2) throw std::logic_error("pads1 requires a two-pad enumerator");
  return {pad(index, 1), pad(index, 2)};
}

PadSet2 PadEnumerator::pads2(std::uint64_t index) const {
  if (pad_count_ != 8) throw std::logic_error("pads2 requires an eight-pad enumerator");
  PadSet2 pads;
  for (std::size_t k = 1; k <= 8; ++k) pads.at(static_cast<int>(k)) = pad(index, k);
  return pads;
}

}  // namespace x2ds
