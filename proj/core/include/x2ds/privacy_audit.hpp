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

// Exhaustive privacy auditor.
//
// For a small secret width every secret is encoded under every pad
// assignment, and the joint counts of (secret, observation) are tabulated.
// Mutual information is then computed exactly from those counts. "Leaks
// nothing" is decided by comparing the per-secret multisets of observations,
// which needs no floating point at all: the multisets are identical iff the
// observation is independent of a uniform secret.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "x2ds/bit_string.hpp"
#include "x2ds/codec.hpp"
#include "x2ds/position.hpp"

namespace x2ds {

// Largest secret width for two-layer audits (2^n secrets x 2^(4n) pads).
inline constexpr int kMaxTwoLayerAuditBits = 4;
// Largest secret width for one-layer audits (2^n secrets x 2^n pads).
inline constexpr int kMaxOneLayerAuditBits = 8;

// What an eavesdropper on route r and base station c sees: the five shares
// of row r and column c, (r,c) counted once, sorted by position.
struct ObservationSet {
  FailurePattern pattern;
  std::vector<std::pair<Position, BitString>> shares;
};

std::vector<Position> observation_positions(FailurePattern pattern);
ObservationSet build_observation(const ShareMatrix& matrix, FailurePattern pattern);

struct MutualInformation {
  // I(X;S) in bits, from exact integer counts.
  double bits = 0.0;
  // Per-secret observation multisets are identical (I = 0 exactly).
  bool independent = false;
  // Every observation value occurs under exactly one secret (I = H(S)).
  bool determines_secret = false;
  std::size_t distinct_observations = 0;
};

// Counts of (secret, observation) pairs.
class JointDistribution {
 public:
  void add(std::uint64_t secret, const std::string& observation, std::uint64_t count = 1);
  void merge(const JointDistribution& other);

  std::uint64_t total(std::uint64_t secret) const;
  std::size_t secret_count() const noexcept { return counts_.size(); }

  // True when every secret contributed the same number of samples.
  bool balanced() const;

  MutualInformation mutual_information() const;

  friend bool operator==(const JointDistribution& a, const JointDistribution& b);

 private:
  using Table = std::vector<std::pair<std::string, std::uint64_t>>;

  // Appends are cheap; tables are sorted and coalesced on first read.
  const std::map<std::uint64_t, Table>& normalized() const;

  mutable std::map<std::uint64_t, Table> counts_;
  mutable bool dirty_ = false;
};

// Appends a share to an observation key.
void append_observation(std::string& key, const BitString& share);

// I(X_{r,c}; S) over all secrets of `secret_bits` bits and all pads.
// Requires even secret_bits <= kMaxTwoLayerAuditBits.
MutualInformation exact_mutual_information(int secret_bits, FailurePattern pattern);

// Same enumeration for an arbitrary set of observed positions (full-matrix
// control, two-column informational checks).
MutualInformation observed_mutual_information(int secret_bits, std::span<const Position> observed);

// I(E_j; S) for one one-layer share. Requires even secret_bits <=
// kMaxOneLayerAuditBits.
MutualInformation single_share_audit(int secret_bits, int share_index);

// I((E_a, E_b); S) for a pair of one-layer shares.
MutualInformation share_pair_audit(int secret_bits, int first_index, int second_index);

// Reduced tuples: each component is an XOR of some of S1, S2, R1..R8,
// stored as a bit mask over those ten symbols.
namespace symbol {
inline constexpr std::uint16_t kS1 = 1U << 0;
inline constexpr std::uint16_t kS2 = 1U << 1;
constexpr std::uint16_t r(int k) { return static_cast<std::uint16_t>(1U << (k + 1)); }
}  // namespace symbol

struct ReducedTuple {
  FailurePattern pattern;
  std::vector<std::uint16_t> components;
};

// The nine reduced observation tuples, indexed by case number - 1.
const std::array<ReducedTuple, 9>& reduced_case_tuples();
const ReducedTuple& reduced_tuple(FailurePattern pattern);

// "S2^R2" style rendering of one component.
std::string describe_component(std::uint16_t mask);

MutualInformation reduced_tuple_mutual_information(int secret_bits, FailurePattern pattern);

// True iff the reduced tuple and the raw five-share observation carry the
// same information about S.
bool case_expression_check(int secret_bits, FailurePattern pattern);

// Entropy in bits of pad R_k under exhaustive enumeration.
double pad_marginal_entropy(int secret_bits, int pad_index);

struct AuditOptions {
  int secret_bits = 2;
  // Empty means all nine patterns.
  std::vector<FailurePattern> patterns;
  // Adds informational MI values for observing two whole base stations.
  bool two_column_info = false;
  // Worker threads for the enumeration; results do not depend on it.
  unsigned threads = 1;
};

struct CaseResult {
  int case_no = 0;
  FailurePattern pattern;
  MutualInformation raw;
  MutualInformation reduced;
  bool passed = false;
};

struct ShareAuditResult {
  std::string label;
  MutualInformation mi;
  double expected_bits = 0.0;
  bool passed = false;
};

struct AuditReport {
  int secret_bits = 0;
  std::vector<CaseResult> cases;
  std::vector<ShareAuditResult> one_layer;
  MutualInformation full_matrix;
  bool full_matrix_passed = false;
  std::vector<double> pad_entropy;
  bool pad_entropy_passed = false;
  std::vector<std::pair<std::string, MutualInformation>> informational;

  bool passed() const;
};

AuditReport audit_all_cases(const AuditOptions& options);

// One line per case, then one-layer, control and premise lines.
std::string format_report(const AuditReport& report);

// "0 (exact)", "2.0", or six decimals for non-integral values.
std::string format_bits(const MutualInformation& mi);

}  // namespace x2ds
