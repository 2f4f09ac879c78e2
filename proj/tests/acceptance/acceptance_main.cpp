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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "x2ds/x2ds.hpp"

namespace {

using namespace x2ds;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kRandomTrials = 100;
constexpr std::size_t kClosedFormInstances = 10'000;
constexpr std::size_t kClosedFormMaxBits = 64 * 1024 * 8;
constexpr double kLinearityBound = 3.0;
constexpr int kLinearityReps = 5;

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1: every 2-bit secret, every pad assignment, every failure pattern.
Outcome exhaustive_availability() {
  const PadEnumerator pads_enum(1, 8);
  std::size_t ok = 0;
  std::size_t total = 0;
  for (std::uint64_t s = 0; s < 4; ++s) {
    const BitString secret = BitString::from_uint(s, 2);
    for (std::uint64_t idx = 0; idx < pads_enum.size(); ++idx) {
      const ShareMatrix m = encode_secret(secret, pads_enum.pads2(idx));
      for (const FailurePattern f : all_failure_patterns()) {
        ++total;
        if (dec2(build_decoding_set(m, f), f, 2) == secret) ++ok;
      }
    }
  }
  return {ok == 9216 && total == 9216, std::to_string(ok) + "/" + std::to_string(total)};
}

// 2: secure pads, byte-exact recovery per pattern.
Outcome randomized_availability() {
  PadSource src = PadSource::secure();
  std::ostringstream detail;
  bool passed = true;
  for (std::size_t bits : {std::size_t{8}, std::size_t{1024}, std::size_t{8} << 20}) {
    std::size_t ok = 0;
    std::size_t total = 0;
    for (std::size_t t = 0; t < kRandomTrials; ++t) {
      const BitString secret = src.draw(bits);
      const ShareMatrix m = encode_secret(secret, generate_pads2(bits / 2, src));
      for (const FailurePattern f : all_failure_patterns()) {
        ++total;
        const BitString got = dec2(build_decoding_set(m, f), f, bits);
        if (got.size() == bits && std::ranges::equal(got.bytes(), secret.bytes())) ++ok;
      }
    }
    passed = passed && ok == total && total == 9 * kRandomTrials;
    detail << (detail.tellp() ? ", " : "") << bits << " bits " << ok << "/" << total;
  }
  return {passed, detail.str()};
}

// 3: per-secret observation multisets coincide for all nine patterns.
Outcome exact_privacy() {
  std::ostringstream detail;
  bool passed = true;
  for (int bits : {2, 4}) {
    AuditOptions options;
    options.secret_bits = bits;
    const auto start = Clock::now();
    const AuditReport report = audit_all_cases(options);
    const double elapsed = seconds_since(start);
    std::size_t equal = 0;
    for (const CaseResult& c : report.cases) {
      if (c.raw.independent && c.raw.bits == 0.0) ++equal;
    }
    passed = passed && equal == 9 && report.cases.size() == 9;
    detail << (bits == 2 ? "" : ", ") << bits << " bits " << equal << "/9 patterns ("
           << elapsed << " s)";
  }
  return {passed, detail.str()};
}

// 4: reduced XOR tuples agree with the raw five-share observation.
Outcome case_reduction() {
  std::size_t ok = 0;
  for (const FailurePattern p : all_failure_patterns()) {
    const MutualInformation raw = exact_mutual_information(2, p);
    const MutualInformation reduced = reduced_tuple_mutual_information(2, p);
    if (raw.independent && reduced.independent && raw.bits == 0.0 && reduced.bits == 0.0 &&
        case_expression_check(2, p)) {
      ++ok;
    }
  }
  return {ok == 9, std::to_string(ok) + "/9 cases"};
}

// 5: one share alone is independent of S, any two determine it.
Outcome one_layer_privacy() {
  std::size_t ok = 0;
  std::size_t total = 0;
  for (int bits : {2, 4, 6, 8}) {
    for (int j = 1; j <= 3; ++j) {
      ++total;
      const MutualInformation mi = single_share_audit(bits, j);
      if (mi.independent && mi.bits == 0.0) ++ok;
    }
    for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
      ++total;
      const MutualInformation mi = share_pair_audit(bits, a, b);
      if (mi.determines_secret && mi.bits == static_cast<double>(bits)) ++ok;
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " audits"};
}

// 6: closed forms against composed encodings.
Outcome closed_form_equivalence() {
  std::mt19937_64 rng(20261016);
  PadSource src = PadSource::seeded_test(rng());
  std::size_t ok = 0;
  std::size_t largest = 0;
  for (std::size_t n = 0; n < kClosedFormInstances; ++n) {
    // Mostly small sizes, with a tail reaching the cap.
    const std::size_t cap = (n % 10 == 0) ? kClosedFormMaxBits : 4096;
    const std::size_t bits = rng() % (cap + 1);
    largest = std::max(largest, bits);
    const SplitSecret split = split_secret(src.draw(bits));
    const PadSet2 pads = generate_pads2(split.padded.payload.size() / 2, src);
    if (enc2(split.padded, pads) == enc2_closed_form(split.padded, pads)) ++ok;
  }
  return {ok == kClosedFormInstances, std::to_string(ok) + "/" +
                                          std::to_string(kClosedFormInstances) +
                                          " instances, largest " + std::to_string(largest) +
                                          " bits"};
}

// 7: the hand-derived 4-bit instance.
Outcome golden_example() {
  PadSet2 pads;
  const char* const r[8] = {"11", "01", "10", "00", "01", "11", "10", "01"};
  for (int k = 1; k <= 8; ++k) pads.at(k) = BitString::parse(r[k - 1]);
  const BitString secret = BitString::parse("1001");
  // expected[col][row]
  const char* const expected[3][3] = {
      {"1110", "1000", "0001"}, {"1001", "0011", "1000"}, {"1110", "0101", "1000"}};
  const ShareMatrix m = encode_secret(secret, pads);
  std::size_t cells = 0;
  for (int j = 1; j <= 3; ++j) {
    for (int i = 1; i <= 3; ++i) {
      if (m.at(i, j) == BitString::parse(expected[j - 1][i - 1])) ++cells;
    }
  }
  const FailurePattern f(1, 1);
  const BitString decoded = dec2(build_decoding_set(m, f), f, 4);
  return {cells == 9 && decoded == secret,
          std::to_string(cells) + "/9 cells, (1,1) decodes to " + decoded.to_string()};
}

// 8: per-byte encode cost at 10 MiB vs 1 MiB.
Outcome linear_complexity() {
  PadSource src = PadSource::secure();
  auto per_byte = [&](std::size_t bytes) {
    const SplitSecret split = split_secret(src.draw(bytes * 8));
    const PadSet2 pads = generate_pads2(split.padded.payload.size() / 2, src);
    double best = 1e300;
    for (int rep = 0; rep < kLinearityReps; ++rep) {
      const auto start = Clock::now();
      const ShareMatrix m = enc2(split.padded, pads);
      best = std::min(best, seconds_since(start));
      if (m.share_length() != split.padded.payload.size()) return -1.0;
    }
    return best / static_cast<double>(bytes);
  };
  const double small = per_byte(std::size_t{1} << 20);
  const double large = per_byte(std::size_t{10} << 20);
  if (small <= 0 || large <= 0) return {false, "encode produced wrong share size"};
  const double ratio = std::max(small, large) / std::min(small, large);
  std::ostringstream detail;
  detail << "ns/byte 1 MiB " << small * 1e9 << ", 10 MiB " << large * 1e9 << ", ratio " << ratio
         << " (bound " << kLinearityBound << ")";
  return {ratio <= kLinearityBound, detail.str()};
}

// 9: the guarantees stop where the model says they do.
Outcome negative_controls() {
  std::ostringstream detail;
  bool passed = true;

  std::vector<Position> all;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) all.emplace_back(i, j);
  }
  for (int bits : {2, 4}) {
    const MutualInformation mi = observed_mutual_information(bits, all);
    const bool ok = mi.determines_secret && mi.bits == static_cast<double>(bits);
    passed = passed && ok;
    detail << "full matrix MI " << format_bits(mi) << " at " << bits << " bits; ";
  }

  PadSource src = PadSource::secure();
  const BitString secret = src.draw(64);
  const ShareMatrix m = encode_secret(secret, generate_pads2(32, src));
  std::size_t refused = 0;
  for (int j = 1; j <= 3; ++j) {
    ShareSet column;
    for (int i = 1; i <= 3; ++i) column.emplace(Position(i, j), m.at(i, j));
    try {
      decode_available(column, secret.size());
    } catch (const InsufficientShares&) {
      ++refused;
    }
  }
  passed = passed && refused == 3;
  detail << "single column refused " << refused << "/3; ";

  std::size_t unrecoverable = 0;
  for (const std::set<int>& lost : {std::set<int>{1, 2}, {1, 3}, {2, 3}}) {
    const TransferOutcome out = simulate_correlated_loss(secret, lost, {}, src);
    if (!out.recovered && !out.recovered_secret) ++unrecoverable;
  }
  passed = passed && unrecoverable == 3;
  detail << "two-column jam unrecoverable " << unrecoverable << "/3";
  return {passed, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"exhaustive availability, 2-bit secrets", exhaustive_availability},
      {"randomized availability, secure pads", randomized_availability},
      {"exact privacy, nine observation patterns", exact_privacy},
      {"reduced tuples match raw observations", case_reduction},
      {"one-layer privacy and pair recovery", one_layer_privacy},
      {"closed form equals composed encoding", closed_form_equivalence},
      {"golden worked example", golden_example},
      {"linear encode cost", linear_complexity},
      {"negative controls", negative_controls},
  };
  int failures = 0;
  int number = 0;
  for (const auto& [name, check] : criteria) {
    ++number;
    const auto start = Clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.passed) ++failures;
    std::printf("criterion %d: %s  %s: %s [%.2f s]\n", number, outcome.passed ? "PASS" : "FAIL",
                name, outcome.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", number - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
