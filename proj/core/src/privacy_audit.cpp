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

#include "x2ds/privacy_audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "x2ds/errors.hpp"
#include "x2ds/randomness.hpp"

namespace x2ds {
namespace {

// Counts are products of two 64-bit totals.
__extension__ using Wide = unsigned __int128;

using symbol::kS1;
using symbol::kS2;
using symbol::r;

void require_two_layer_bound(int secret_bits) {
  if (secret_bits < 0 || secret_bits % 2 != 0) {
    throw std::invalid_argument("secret bits must be even");
  }
  if (secret_bits > kMaxTwoLayerAuditBits) {
    throw TractabilityError("exhaustive two-layer audit is limited to " +
                            std::to_string(kMaxTwoLayerAuditBits) + " secret bits (requested " +
                            std::to_string(secret_bits) + ")");
  }
}

void require_one_layer_bound(int secret_bits) {
  if (secret_bits < 0 || secret_bits % 2 != 0) {
    throw std::invalid_argument("secret bits must be even");
  }
  if (secret_bits > kMaxOneLayerAuditBits) {
    throw TractabilityError("exhaustive one-layer audit is limited to " +
                            std::to_string(kMaxOneLayerAuditBits) + " secret bits (requested " +
                            std::to_string(secret_bits) + ")");
  }
}

// One thing to tabulate against the secret: either a set of matrix cells or
// a reduced XOR tuple.
struct Probe {
  std::vector<Position> positions;
  const ReducedTuple* reduced = nullptr;
};

BitString evaluate_component(std::uint16_t mask, const SplitSecret& split, const PadSet2& pads) {
  BitString value(split.s1.size());
  if (mask & kS1) value ^= split.s1;
  if (mask & kS2) value ^= split.s2;
  for (int k = 1; k <= 8; ++k) {
    if (mask & r(k)) value ^= pads.at(k);
  }
  return value;
}

// Encodes every secret under every pad assignment and tabulates each probe.
// Secrets are dealt round-robin to workers; per-worker tables are summed in
// worker order, and since counts only add the result is the same for any
// thread count.
std::vector<JointDistribution> run_two_layer(int secret_bits, const std::vector<Probe>& probes,
                                             unsigned threads) {
  require_two_layer_bound(secret_bits);
  const std::size_t half = static_cast<std::size_t>(secret_bits) / 2;
  const PadEnumerator pads_enum(half, 8);
  const std::uint64_t secret_space = std::uint64_t{1} << secret_bits;
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(secret_space)));

  std::vector<std::vector<JointDistribution>> partial(
      threads, std::vector<JointDistribution>(probes.size()));

  auto worker = [&](unsigned w) {
    auto& tables = partial[w];
    std::string key;
    for (std::uint64_t s = w; s < secret_space; s += threads) {
      const SplitSecret split =
          split_secret(BitString::from_uint(s, static_cast<std::size_t>(secret_bits)));
      for (std::uint64_t idx = 0; idx < pads_enum.size(); ++idx) {
        const PadSet2 pads = pads_enum.pads2(idx);
        const ShareMatrix m = enc2(split.padded, pads);
        for (std::size_t p = 0; p < probes.size(); ++p) {
          key.clear();
          if (probes[p].reduced != nullptr) {
            for (std::uint16_t mask : probes[p].reduced->components) {
              append_observation(key, evaluate_component(mask, split, pads));
            }
          } else {
            for (const Position& pos : probes[p].positions) append_observation(key, m.at(pos));
          }
          tables[p].add(s, key);
        }
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }

  std::vector<JointDistribution> merged(probes.size());
  for (const auto& tables : partial) {
    for (std::size_t p = 0; p < probes.size(); ++p) merged[p].merge(tables[p]);
  }
  return merged;
}

JointDistribution run_one_layer(int secret_bits, std::span<const int> share_indices) {
  require_one_layer_bound(secret_bits);
  for (int j : share_indices) {
    if (!index_in_range(j)) throw std::out_of_range("share index out of range (expected 1..3)");
  }
  const std::size_t half = static_cast<std::size_t>(secret_bits) / 2;
  const PadEnumerator pads_enum(half, 2);
  const std::uint64_t secret_space = std::uint64_t{1} << secret_bits;

  JointDistribution dist;
  std::string key;
  for (std::uint64_t s = 0; s < secret_space; ++s) {
    const BitString payload = BitString::from_uint(s, static_cast<std::size_t>(secret_bits));
    for (std::uint64_t idx = 0; idx < pads_enum.size(); ++idx) {
      const OneLayerShares e = enc1(payload, pads_enum.pads1(idx));
      key.clear();
      for (int j : share_indices) append_observation(key, e.at(j));
      dist.add(s, key);
    }
  }
  return dist;
}

std::vector<Position> all_positions() {
  std::vector<Position> out;
  for (int i = 1; i <= kGridSize; ++i) {
    for (int j = 1; j <= kGridSize; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::vector<Position> observation_positions(FailurePattern pattern) {
  std::vector<Position> out;
  for (int i = 1; i <= kGridSize; ++i) out.emplace_back(i, pattern.bs);
  for (int j = 1; j <= kGridSize; ++j) {
    if (j != pattern.bs) out.emplace_back(pattern.route, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ObservationSet build_observation(const ShareMatrix& matrix, FailurePattern pattern) {
  ObservationSet obs;
  obs.pattern = pattern;
  for (const Position& pos : observation_positions(pattern)) {
    obs.shares.emplace_back(pos, matrix.at(pos));
  }
  return obs;
}

void append_observation(std::string& key, const BitString& share) {
  // Shares under one probe all have the same length, so plain concatenation
  // of the packed bytes is unambiguous.
  const auto bytes = share.bytes();
  key.append(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

void JointDistribution::add(std::uint64_t secret, const std::string& observation,
                            std::uint64_t count) {
  counts_[secret].emplace_back(observation, count);
  dirty_ = true;
}

void JointDistribution::merge(const JointDistribution& other) {
  for (const auto& [secret, table] : other.counts_) {
    auto& mine = counts_[secret];
    mine.insert(mine.end(), table.begin(), table.end());
  }
  dirty_ = true;
}

const std::map<std::uint64_t, JointDistribution::Table>& JointDistribution::normalized() const {
  if (!dirty_) return counts_;
  for (auto& [secret, table] : counts_) {
    std::sort(table.begin(), table.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (out > 0 && table[out - 1].first == table[i].first) {
        table[out - 1].second += table[i].second;
      } else {
        if (out != i) table[out] = std::move(table[i]);
        ++out;
      }
    }
    table.resize(out);
  }
  dirty_ = false;
  return counts_;
}

bool operator==(const JointDistribution& a, const JointDistribution& b) {
  return a.normalized() == b.normalized();
}

std::uint64_t JointDistribution::total(std::uint64_t secret) const {
  const auto it = counts_.find(secret);
  if (it == counts_.end()) return 0;
  std::uint64_t sum = 0;
  for (const auto& [obs, count] : it->second) sum += count;
  return sum;
}

bool JointDistribution::balanced() const {
  std::optional<std::uint64_t> first;
  for (const auto& [secret, table] : counts_) {
    const std::uint64_t t = total(secret);
    if (first && *first != t) return false;
    first = t;
  }
  return true;
}

MutualInformation JointDistribution::mutual_information() const {
  MutualInformation mi;
  const auto& counts = normalized();
  if (counts.empty()) {
    mi.independent = true;
    mi.determines_secret = true;
    return mi;
  }

  std::map<std::uint64_t, std::uint64_t> per_secret;
  std::uint64_t n = 0;
  // Every (observation, secret, count) cell, grouped by observation.
  struct Cell {
    const std::string* obs;
    std::uint64_t secret;
    std::uint64_t count;
  };
  std::vector<Cell> cells;
  for (const auto& [secret, table] : counts) {
    for (const auto& [obs, count] : table) {
      cells.push_back({&obs, secret, count});
      per_secret[secret] += count;
      n += count;
    }
  }
  std::stable_sort(cells.begin(), cells.end(),
                   [](const Cell& a, const Cell& b) { return *a.obs < *b.obs; });

  // I = sum c(s,x)/N * log2(c(s,x) * N / (c(s) * c(x))). Terms whose ratio
  // is exactly one contribute exactly zero.
  long double acc = 0.0L;
  bool determines = true;
  std::size_t distinct = 0;
  for (std::size_t lo = 0; lo < cells.size();) {
    std::size_t hi = lo;
    std::uint64_t marginal = 0;
    while (hi < cells.size() && *cells[hi].obs == *cells[lo].obs) marginal += cells[hi++].count;
    if (hi - lo > 1) determines = false;
    ++distinct;
    for (std::size_t i = lo; i < hi; ++i) {
      const Wide num = static_cast<Wide>(cells[i].count) * n;
      const Wide den = static_cast<Wide>(per_secret[cells[i].secret]) * marginal;
      if (num == den) continue;
      acc += static_cast<long double>(cells[i].count) *
             (std::log2(static_cast<long double>(num)) - std::log2(static_cast<long double>(den)));
    }
    lo = hi;
  }
  mi.bits = static_cast<double>(acc / static_cast<long double>(n));

  // Multiset equality: the coalesced, sorted tables must be identical.
  const auto& reference = counts.begin()->second;
  mi.independent = std::all_of(counts.begin(), counts.end(),
                               [&](const auto& entry) { return entry.second == reference; });
  mi.determines_secret = determines;
  mi.distinct_observations = distinct;
  return mi;
}

MutualInformation exact_mutual_information(int secret_bits, FailurePattern pattern) {
  const std::vector<Probe> probes{{observation_positions(pattern), nullptr}};
  return run_two_layer(secret_bits, probes, 1).front().mutual_information();
}

MutualInformation observed_mutual_information(int secret_bits,
                                              std::span<const Position> observed) {
  std::vector<Position> positions(observed.begin(), observed.end());
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  const std::vector<Probe> probes{{positions, nullptr}};
  return run_two_layer(secret_bits, probes, 1).front().mutual_information();
}

MutualInformation single_share_audit(int secret_bits, int share_index) {
  const int idx[] = {share_index};
  return run_one_layer(secret_bits, idx).mutual_information();
}

MutualInformation share_pair_audit(int secret_bits, int first_index, int second_index) {
  if (first_index == second_index) throw std::invalid_argument("share pair needs two distinct shares");
  const int idx[] = {first_index, second_index};
  return run_one_layer(secret_bits, idx).mutual_information();
}

const std::array<ReducedTuple, 9>& reduced_case_tuples() {
  static const std::array<ReducedTuple, 9> tuples{{
      {FailurePattern(1, 1), {kS2 | r(2), r(2) | r(6), kS2 | r(8)}},
      {FailurePattern(2, 1), {kS1 | r(5), kS1 | r(2) | r(7), kS2 | r(2)}},
      {FailurePattern(3, 1), {kS1 | r(6), kS1 | r(2) | r(8), kS2 | r(2), kS2 | r(7)}},
      {FailurePattern(1, 2), {kS1 | r(1), kS2 | r(1) | r(8)}},
      {FailurePattern(2, 2), {kS1 | r(1), kS1 | r(7), kS2 | r(3)}},
      {FailurePattern(3, 2), {kS1 | r(1), kS1 | r(8), kS2 | r(4), kS2 | r(1) | r(7)}},
      {FailurePattern(1, 3), {kS1 | r(2), kS2 | r(1)}},
      {FailurePattern(2, 3), {kS1 | r(2), kS2 | r(1), kS2 | r(2) | r(3), kS1 | r(1) | r(5)}},
      {FailurePattern(3, 3),
       {kS1 | r(2), kS2 | r(1), kS2 | r(2) | r(4), r(1) | r(3), kS1 | r(1) | r(6), r(2) | r(5)}},
  }};
  return tuples;
}

const ReducedTuple& reduced_tuple(FailurePattern pattern) {
  return reduced_case_tuples()[static_cast<std::size_t>(case_number(pattern) - 1)];
}

std::string describe_component(std::uint16_t mask) {
  std::string out;
  auto add = [&](const std::string& name) { out += (out.empty() ? "" : "^") + name; };
  if (mask & kS1) add("S1");
  if (mask & kS2) add("S2");
  for (int k = 1; k <= 8; ++k) {
    if (mask & r(k)) add("R" + std::to_string(k));
  }
  return out.empty() ? "0" : out;
}

MutualInformation reduced_tuple_mutual_information(int secret_bits, FailurePattern pattern) {
  const std::vector<Probe> probes{{{}, &reduced_tuple(pattern)}};
  return run_two_layer(secret_bits, probes, 1).front().mutual_information();
}

bool case_expression_check(int secret_bits, FailurePattern pattern) {
  const std::vector<Probe> probes{{observation_positions(pattern), nullptr},
                                  {{}, &reduced_tuple(pattern)}};
  const auto dists = run_two_layer(secret_bits, probes, 1);
  const MutualInformation raw = dists[0].mutual_information();
  const MutualInformation reduced = dists[1].mutual_information();
  return raw.independent == reduced.independent && raw.bits == reduced.bits;
}

double pad_marginal_entropy(int secret_bits, int pad_index) {
  require_two_layer_bound(secret_bits);
  if (pad_index < 1 || pad_index > 8) throw std::out_of_range("pad index out of range (expected 1..8)");
  const PadEnumerator pads_enum(static_cast<std::size_t>(secret_bits) / 2, 8);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t idx = 0; idx < pads_enum.size(); ++idx) {
    ++counts[pads_enum.pad(idx, static_cast<std::size_t>(pad_index)).to_uint()];
  }
  const auto total = static_cast<long double>(pads_enum.size());
  long double h = 0.0L;
  for (const auto& [value, count] : counts) {
    const long double p = static_cast<long double>(count) / total;
    h -= p * std::log2(p);
  }
  return static_cast<double>(h);
}

bool AuditReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.passed; }) &&
         std::all_of(one_layer.begin(), one_layer.end(), [](const auto& s) { return s.passed; }) &&
         full_matrix_passed && pad_entropy_passed;
}

AuditReport audit_all_cases(const AuditOptions& options) {
  require_two_layer_bound(options.secret_bits);
  AuditReport report;
  report.secret_bits = options.secret_bits;

  std::vector<FailurePattern> patterns = options.patterns;
  if (patterns.empty()) {
    const auto all = all_failure_patterns();
    patterns.assign(all.begin(), all.end());
  }

  // Raw and reduced probe per case, then the full-matrix control, then the
  // optional two-column probes.
  std::vector<Probe> probes;
  for (const FailurePattern& p : patterns) {
    probes.push_back({observation_positions(p), nullptr});
    probes.push_back({{}, &reduced_tuple(p)});
  }
  probes.push_back({all_positions(), nullptr});
  const std::array<std::pair<int, int>, 3> column_pairs{{{1, 2}, {1, 3}, {2, 3}}};
  if (options.two_column_info) {
    for (const auto& [a, b] : column_pairs) {
      std::vector<Position> cells;
      for (int i = 1; i <= kGridSize; ++i) {
        cells.emplace_back(i, a);
        cells.emplace_back(i, b);
      }
      std::sort(cells.begin(), cells.end());
      probes.push_back({cells, nullptr});
    }
  }

  const auto dists = run_two_layer(options.secret_bits, probes, options.threads);
  const double full_bits = static_cast<double>(options.secret_bits);

  for (std::size_t k = 0; k < patterns.size(); ++k) {
    CaseResult c;
    c.pattern = patterns[k];
    c.case_no = case_number(patterns[k]);
    c.raw = dists[2 * k].mutual_information();
    c.reduced = dists[2 * k + 1].mutual_information();
    c.passed = c.raw.independent && c.reduced.independent && c.raw.bits == 0.0 &&
               c.reduced.bits == 0.0;
    report.cases.push_back(c);
  }

  report.full_matrix = dists[2 * patterns.size()].mutual_information();
  report.full_matrix_passed =
      report.full_matrix.determines_secret && report.full_matrix.bits == full_bits;

  if (options.two_column_info) {
    for (std::size_t k = 0; k < column_pairs.size(); ++k) {
      report.informational.emplace_back(
          "base stations " + std::to_string(column_pairs[k].first) + "+" +
              std::to_string(column_pairs[k].second),
          dists[2 * patterns.size() + 1 + k].mutual_information());
    }
  }

  for (int j = 1; j <= 3; ++j) {
    ShareAuditResult s;
    s.label = "E" + std::to_string(j);
    s.mi = single_share_audit(options.secret_bits, j);
    s.expected_bits = 0.0;
    s.passed = s.mi.independent && s.mi.bits == 0.0;
    report.one_layer.push_back(s);
  }
  for (const auto& [a, b] : column_pairs) {
    ShareAuditResult s;
    s.label = "E" + std::to_string(a) + "+E" + std::to_string(b);
    s.mi = share_pair_audit(options.secret_bits, a, b);
    s.expected_bits = full_bits;
    s.passed = s.mi.determines_secret && s.mi.bits == full_bits;
    report.one_layer.push_back(s);
  }

  const double half = full_bits / 2.0;
  report.pad_entropy_passed = true;
  for (int k = 1; k <= 8; ++k) {
    report.pad_entropy.push_back(pad_marginal_entropy(options.secret_bits, k));
    report.pad_entropy_passed = report.pad_entropy_passed && report.pad_entropy.back() == half;
  }
  return report;
}

std::string format_bits(const MutualInformation& mi) {
  if (mi.independent && mi.bits == 0.0) return "0 (exact)";
  char buf[64];
  if (mi.bits == std::floor(mi.bits)) {
    std::snprintf(buf, sizeof(buf), "%.1f", mi.bits);
  } else {
    std::snprintf(buf, sizeof(buf), "%.6f", mi.bits);
  }
  return buf;
}

std::string format_report(const AuditReport& report) {
  std::ostringstream os;
  os << "privacy audit: secret bits = " << report.secret_bits << ", exhaustive over "
     << (std::uint64_t{1} << report.secret_bits) << " secrets x "
     << (std::uint64_t{1} << (4 * report.secret_bits)) << " pad assignments\n";
  for (const CaseResult& c : report.cases) {
    const ReducedTuple& t = reduced_tuple(c.pattern);
    os << "case " << c.case_no << " (r=" << c.pattern.route << ",c=" << c.pattern.bs
       << "): raw MI = " << format_bits(c.raw) << "; reduced MI = " << format_bits(c.reduced)
       << " [";
    for (std::size_t k = 0; k < t.components.size(); ++k) {
      os << (k ? ", " : "") << describe_component(t.components[k]);
    }
    os << "]; " << pass_fail(c.passed) << '\n';
  }
  for (const ShareAuditResult& s : report.one_layer) {
    os << "one-layer " << s.label << ": MI = " << format_bits(s.mi) << " (expected "
       << (s.expected_bits == 0.0 ? std::string("0") : format_bits({s.expected_bits, false, true, 0}))
       << "); " << pass_fail(s.passed) << '\n';
  }
  os << "control full matrix: MI = " << format_bits(report.full_matrix) << " (expected "
     << format_bits({static_cast<double>(report.secret_bits), false, true, 0}) << "); "
     << pass_fail(report.full_matrix_passed) << '\n';
  os << "premise pad entropy:";
  for (double h : report.pad_entropy) os << ' ' << format_bits({h, false, false, 0});
  os << " (expected " << format_bits({report.secret_bits / 2.0, false, false, 0}) << " each); "
     << pass_fail(report.pad_entropy_passed) << '\n';
  for (const auto& [label, mi] : report.informational) {
    os << "info " << label << ": MI = " << format_bits(mi) << '\n';
  }
  os << "result: " << pass_fail(report.passed()) << '\n';
  return os.str();
}

}  // namespace x2ds
