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

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "x2ds/errors.hpp"

namespace x2ds {
namespace {

std::vector<Position> indices(FailurePattern p) {
  ShareMatrix m(2);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) m.at(i, j) = BitString(2);
  }
  std::vector<Position> out;
  for (const auto& [pos, share] : build_observation(m, p).shares) out.push_back(pos);
  return out;
}

TEST(BuildObservation, RowPlusColumn) {
  using P = Position;
  EXPECT_EQ(indices({1, 1}), (std::vector<P>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}}));
  EXPECT_EQ(indices({3, 3}), (std::vector<P>{{1, 3}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}));
  EXPECT_EQ(indices({2, 1}), (std::vector<P>{{1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 1}}));
}

TEST(JointDistribution, IndependentCounts) {
  JointDistribution d;
  for (std::uint64_t s = 0; s < 2; ++s) {
    d.add(s, "a", 2);
    d.add(s, "b", 2);
  }
  const MutualInformation mi = d.mutual_information();
  EXPECT_TRUE(mi.independent);
  EXPECT_FALSE(mi.determines_secret);
  EXPECT_EQ(mi.bits, 0.0);
  EXPECT_TRUE(d.balanced());
}

TEST(JointDistribution, NoisyChannelMatchesClosedForm) {
  // X equals a uniform bit S with probability 3/4: I = 1 - h(3/4).
  JointDistribution d;
  d.add(0, "0", 3);
  d.add(0, "1", 1);
  d.add(1, "0", 1);
  d.add(1, "1", 3);
  const double h = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
  const MutualInformation mi = d.mutual_information();
  EXPECT_NEAR(mi.bits, 1.0 - h, 1e-12);
  EXPECT_FALSE(mi.independent);
  EXPECT_FALSE(mi.determines_secret);
}

TEST(JointDistribution, DeterminingObservation) {
  JointDistribution d;
  for (std::uint64_t s = 0; s < 4; ++s) d.add(s, std::string(1, static_cast<char>(s)), 5);
  const MutualInformation mi = d.mutual_information();
  EXPECT_TRUE(mi.determines_secret);
  EXPECT_EQ(mi.bits, 2.0);
}

TEST(JointDistribution, MergeIsAdditive) {
  JointDistribution a;
  JointDistribution b;
  a.add(0, "x");
  b.add(0, "x", 2);
  b.add(1, "y");
  a.merge(b);
  EXPECT_EQ(a.total(0), 3u);
  EXPECT_EQ(a.total(1), 1u);
  EXPECT_FALSE(a.balanced());
}

TEST(ExactMutualInformation, CaseOneIsZero) {
  const MutualInformation mi = exact_mutual_information(2, {1, 1});
  EXPECT_TRUE(mi.independent);
  EXPECT_EQ(mi.bits, 0.0);
}

TEST(ExactMutualInformation, AllNinePatternsAtTwoBits) {
  for (const FailurePattern p : all_failure_patterns()) {
    const MutualInformation mi = exact_mutual_information(2, p);
    EXPECT_TRUE(mi.independent) << to_string(p);
    EXPECT_EQ(mi.bits, 0.0) << to_string(p);
  }
}

TEST(ExactMutualInformation, FullMatrixControl) {
  std::vector<Position> all;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) all.emplace_back(i, j);
  }
  const MutualInformation mi = observed_mutual_information(2, all);
  EXPECT_TRUE(mi.determines_secret);
  EXPECT_EQ(mi.bits, 2.0);
}

TEST(ExactMutualInformation, TwoFullColumnsDetermineSecret) {
  // Outside the adversary model: two base stations reveal two intermediates.
  std::vector<Position> cols;
  for (int i = 1; i <= 3; ++i) {
    cols.emplace_back(i, 1);
    cols.emplace_back(i, 3);
  }
  EXPECT_EQ(observed_mutual_information(2, cols).bits, 2.0);
}

TEST(ExactMutualInformation, OneFullColumnLeaksNothing) {
  const std::vector<Position> col{{1, 2}, {2, 2}, {3, 2}};
  EXPECT_TRUE(observed_mutual_information(2, col).independent);
}

TEST(ExactMutualInformation, Bounds) {
  EXPECT_THROW(exact_mutual_information(6, {1, 1}), TractabilityError);
  EXPECT_THROW(exact_mutual_information(3, {1, 1}), std::invalid_argument);
}

TEST(SingleShareAudit, EachShareIsIndependent) {
  for (int bits : {2, 4, 6}) {
    for (int j = 1; j <= 3; ++j) {
      const MutualInformation mi = single_share_audit(bits, j);
      EXPECT_TRUE(mi.independent) << bits << " E" << j;
      EXPECT_EQ(mi.bits, 0.0);
    }
  }
}

TEST(SingleShareAudit, PairsDetermineSecret) {
  for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
    const MutualInformation mi = share_pair_audit(2, a, b);
    EXPECT_TRUE(mi.determines_secret);
    EXPECT_EQ(mi.bits, 2.0);
  }
  EXPECT_THROW(share_pair_audit(2, 1, 1), std::invalid_argument);
  EXPECT_THROW(single_share_audit(10, 1), TractabilityError);
}

TEST(ReducedTuples, TableMatchesCases) {
  auto render = [](FailurePattern p) {
    std::string out;
    for (auto mask : reduced_tuple(p).components) {
      out += (out.empty() ? "" : ", ") + describe_component(mask);
    }
    return out;
  };
  EXPECT_EQ(render({1, 1}), "S2^R2, R2^R6, S2^R8");
  EXPECT_EQ(render({1, 3}), "S1^R2, S2^R1");
  EXPECT_EQ(render({3, 3}), "S1^R2, S2^R1, S2^R2^R4, R1^R3, S1^R1^R6, R2^R5");
  for (const FailurePattern p : all_failure_patterns()) {
    EXPECT_EQ(reduced_tuple(p).pattern, p);
  }
}

TEST(CaseExpressionCheck, SelectedCases) {
  EXPECT_TRUE(case_expression_check(2, {1, 1}));
  EXPECT_TRUE(case_expression_check(2, {1, 3}));
  EXPECT_TRUE(case_expression_check(2, {3, 3}));
  EXPECT_TRUE(reduced_tuple_mutual_information(2, {3, 3}).independent);
}

TEST(PadMarginalEntropy, UniformPads) {
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(pad_marginal_entropy(2, k), 1.0);
    EXPECT_EQ(pad_marginal_entropy(4, k), 2.0);
  }
}

TEST(AuditAllCases, TwoBitReport) {
  AuditOptions options;
  options.secret_bits = 2;
  options.two_column_info = true;
  const AuditReport report = audit_all_cases(options);
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.cases.size(), 9u);
  ASSERT_EQ(report.informational.size(), 3u);
  const std::string text = format_report(report);
  std::size_t exact = 0;
  for (std::size_t pos = text.find("raw MI = 0 (exact)"); pos != std::string::npos;
       pos = text.find("raw MI = 0 (exact)", pos + 1)) {
    ++exact;
  }
  EXPECT_EQ(exact, 9u);
  EXPECT_NE(text.find("control full matrix: MI = 2.0"), std::string::npos);
  EXPECT_NE(text.find("result: PASS"), std::string::npos);
}

TEST(AuditAllCases, FilterAndThreadInvariance) {
  AuditOptions one;
  one.secret_bits = 2;
  one.patterns = {FailurePattern(3, 3)};
  const AuditReport a = audit_all_cases(one);
  ASSERT_EQ(a.cases.size(), 1u);
  EXPECT_EQ(a.cases[0].case_no, 9);

  AuditOptions many = one;
  many.threads = 3;
  const AuditReport b = audit_all_cases(many);
  EXPECT_EQ(format_report(a), format_report(b));
}

}  // namespace
}  // namespace x2ds
