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

#include "x2ds/netsim.hpp"

#include <sstream>

#include "x2ds/errors.hpp"

namespace x2ds {
namespace {

constexpr int kMaxExhaustiveCampaignBits = 2;

void check_index(const std::optional<int>& index, const char* name) {
  if (index && !index_in_range(*index)) {
    throw std::out_of_range(std::string(name) + " out of range (expected 1..3)");
  }
}

// Base stations forward their column, then routes carry rows; a share
// arrives iff neither its base station nor its route is down.
TransferOutcome transmit(const BitString& secret, const ShareMatrix& matrix,
                         const std::set<int>& lost_bs, const std::set<int>& lost_routes,
                         const AdversaryPlan& observe) {
  TransferOutcome out;

  if (observe.observe_bs || observe.observe_route) {
    std::set<Position> seen;
    for (int k = 1; k <= kGridSize; ++k) {
      if (observe.observe_bs) seen.emplace(k, *observe.observe_bs);
      if (observe.observe_route) seen.emplace(*observe.observe_route, k);
    }
    out.observed_positions.assign(seen.begin(), seen.end());
    if (observe.observe_bs && observe.observe_route) {
      out.observation = build_observation(matrix, FailurePattern(*observe.observe_route,
                                                                 *observe.observe_bs));
    }
  }

  ShareSet at_base_stations;
  for (int bs = 1; bs <= kGridSize; ++bs) {
    if (lost_bs.count(bs)) continue;
    for (int route = 1; route <= kGridSize; ++route) {
      at_base_stations.emplace(Position(route, bs), matrix.at(route, bs));
    }
  }
  ShareSet delivered;
  for (auto& [pos, share] : at_base_stations) {
    if (!lost_routes.count(pos.route)) delivered.emplace(pos, share);
  }
  out.delivered_count = delivered.size();

  try {
    Reconstruction rec = decode_available(delivered, matrix.original_length());
    out.recovered = rec.secret == secret;
    if (!out.recovered) out.failure_reason = "decoded secret differs from the input";
    out.recovered_secret = std::move(rec.secret);
  } catch (const InsufficientShares& e) {
    out.failure_reason = e.what();
  } catch (const InconsistentShares& e) {
    out.failure_reason = e.what();
  }
  return out;
}

std::set<int> as_set(const std::optional<int>& index) {
  return index ? std::set<int>{*index} : std::set<int>{};
}

}  // namespace

void AdversaryPlan::validate() const {
  check_index(jam_bs, "jam_bs");
  check_index(jam_route, "jam_route");
  check_index(observe_bs, "observe_bs");
  check_index(observe_route, "observe_route");
}

TransferOutcome simulate_transfer(const BitString& secret, const AdversaryPlan& plan,
                                  const PadSet2& pads) {
  plan.validate();
  const ShareMatrix matrix = encode_secret(secret, pads);
  return transmit(secret, matrix, as_set(plan.jam_bs), as_set(plan.jam_route), plan);
}

TransferOutcome simulate_transfer(const BitString& secret, const AdversaryPlan& plan,
                                  PadSource& src) {
  const PadSet2 pads = generate_pads2(padded_length(secret.size()) / 2, src);
  return simulate_transfer(secret, plan, pads);
}

TransferOutcome simulate_correlated_loss(const BitString& secret, const std::set<int>& lost_bs,
                                         const std::set<int>& lost_routes, PadSource& src) {
  for (int k : lost_bs) check_index(k, "lost base station");
  for (int k : lost_routes) check_index(k, "lost route");
  const PadSet2 pads = generate_pads2(padded_length(secret.size()) / 2, src);
  const ShareMatrix matrix = encode_secret(secret, pads);
  return transmit(secret, matrix, lost_bs, lost_routes, AdversaryPlan{});
}

std::size_t CampaignReport::patterns_recovered() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.recovered ? 1 : 0;
  return n;
}

std::size_t CampaignReport::total_runs() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.runs;
  return n;
}

std::size_t CampaignReport::recovered_runs() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.recovered_runs;
  return n;
}

CampaignReport run_campaign(const CampaignOptions& options, PadSource& src) {
  if (options.secret_bits < 0 || options.secret_bits % 2 != 0) {
    throw std::invalid_argument("secret bits must be even");
  }
  if (options.exhaustive && options.secret_bits > kMaxExhaustiveCampaignBits) {
    throw TractabilityError("exhaustive campaign is limited to " +
                            std::to_string(kMaxExhaustiveCampaignBits) + " secret bits");
  }
  if (!options.exhaustive && options.trials == 0) {
    throw std::invalid_argument("campaign needs at least one trial");
  }

  const auto bits = static_cast<std::size_t>(options.secret_bits);
  CampaignReport report;
  report.secret_bits = options.secret_bits;
  report.exhaustive = options.exhaustive;

  for (const FailurePattern jam : all_failure_patterns()) {
    for (const FailurePattern observe : all_failure_patterns()) {
      AdversaryPlan plan;
      plan.jam_bs = jam.bs;
      plan.jam_route = jam.route;
      plan.observe_bs = observe.bs;
      plan.observe_route = observe.route;

      CampaignRow row;
      row.jam = jam;
      row.observe = observe;

      auto record = [&](const BitString& secret, const TransferOutcome& out) {
        ++row.runs;
        row.delivered_count = out.delivered_count;
        if (!out.recovered) {
          throw CampaignFailure("recovery failed for jam " + to_string(jam) + " observe " +
                                    to_string(observe) + " with secret " + secret.to_string() +
                                    ": " + out.failure_reason,
                                jam, observe);
        }
        ++row.recovered_runs;
      };

      if (options.exhaustive) {
        const PadEnumerator pads_enum(bits / 2, 8);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << bits); ++s) {
          const BitString secret = BitString::from_uint(s, bits);
          for (std::uint64_t idx = 0; idx < pads_enum.size(); ++idx) {
            record(secret, simulate_transfer(secret, plan, pads_enum.pads2(idx)));
          }
        }
      } else {
        for (std::size_t t = 0; t < options.trials; ++t) {
          const BitString secret = src.draw(bits);
          record(secret, simulate_transfer(secret, plan, src));
        }
      }
      row.recovered = row.recovered_runs == row.runs;
      report.rows.push_back(row);
    }
  }
  return report;
}

std::string format_campaign(const CampaignReport& report) {
  std::ostringstream os;
  os << "campaign: secret bits = " << report.secret_bits
     << (report.exhaustive ? ", exhaustive pads" : ", random trials") << '\n';
  for (const CampaignRow& row : report.rows) {
    os << "jam r=" << row.jam.route << " c=" << row.jam.bs << " observe r=" << row.observe.route
       << " c=" << row.observe.bs << " delivered=" << row.delivered_count
       << " recovered=" << (row.recovered ? "yes" : "no") << " runs=" << row.recovered_runs << '/'
       << row.runs << '\n';
  }
  os << report.patterns_recovered() << '/' << report.rows.size() << " recovered\n";
  os << "runs: " << report.recovered_runs() << '/' << report.total_runs() << " recovered\n";
  return os.str();
}

}  // namespace x2ds
