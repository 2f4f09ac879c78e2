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

// Deterministic simulator of the source -> 3 base stations -> 3 routes ->
// destination architecture under a worst-case adversary that can jam one
// base station and one route, and eavesdrop on one of each.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "x2ds/bit_string.hpp"
#include "x2ds/codec.hpp"
#include "x2ds/position.hpp"
#include "x2ds/privacy_audit.hpp"
#include "x2ds/randomness.hpp"

namespace x2ds {

struct Topology {
  static constexpr int kBaseStations = kGridSize;
  static constexpr int kRoutes = kGridSize;
};

// At most one jammed and one observed element of each kind.
struct AdversaryPlan {
  std::optional<int> jam_bs;
  std::optional<int> jam_route;
  std::optional<int> observe_bs;
  std::optional<int> observe_route;

  void validate() const;
};

struct TransferOutcome {
  bool recovered = false;
  std::optional<BitString> recovered_secret;
  // Present when both observe_route and observe_bs are set.
  std::optional<ObservationSet> observation;
  // Every share the eavesdropper saw, in position order.
  std::vector<Position> observed_positions;
  std::size_t delivered_count = 0;
  // Decoder diagnostic when recovery failed.
  std::string failure_reason;
};

// Encodes with fresh pads from `src`, drops the jammed column (at the base
// station) and then the jammed row (on the route), and decodes at the
// destination.
TransferOutcome simulate_transfer(const BitString& secret, const AdversaryPlan& plan,
                                  PadSource& src);

// Same pipeline with explicit pads, for exhaustive campaigns.
TransferOutcome simulate_transfer(const BitString& secret, const AdversaryPlan& plan,
                                  const PadSet2& pads);

// Correlated loss outside the adversary model: any number of base stations
// and routes fail together. Used for negative controls only.
TransferOutcome simulate_correlated_loss(const BitString& secret, const std::set<int>& lost_bs,
                                         const std::set<int>& lost_routes, PadSource& src);

struct CampaignOptions {
  int secret_bits = 2;
  // Random trials per (jam, observe) combination. Ignored when exhaustive.
  std::size_t trials = 1;
  // Every secret under every pad assignment; needs secret_bits <= 4.
  bool exhaustive = false;
};

struct CampaignRow {
  FailurePattern jam;
  FailurePattern observe;
  std::size_t delivered_count = 0;
  std::size_t runs = 0;
  std::size_t recovered_runs = 0;
  bool recovered = false;
};

struct CampaignReport {
  int secret_bits = 0;
  bool exhaustive = false;
  std::vector<CampaignRow> rows;

  std::size_t patterns_recovered() const;
  std::size_t total_runs() const;
  std::size_t recovered_runs() const;
};

// Raised on the first failed recovery; names the pattern.
class CampaignFailure : public std::runtime_error {
 public:
  CampaignFailure(const std::string& what, FailurePattern jam, FailurePattern observe)
      : std::runtime_error(what), jam_(jam), observe_(observe) {}

  FailurePattern jam() const noexcept { return jam_; }
  FailurePattern observe() const noexcept { return observe_; }

 private:
  FailurePattern jam_;
  FailurePattern observe_;
};

// All 9 jam patterns x all 9 observe patterns, rows in stable order (jam
// outer, observe inner, each in case order). Secrets are drawn from `src`
// unless exhaustive.
CampaignReport run_campaign(const CampaignOptions& options, PadSource& src);

// One line per row plus summary lines.
std::string format_campaign(const CampaignReport& report);

}  // namespace x2ds
