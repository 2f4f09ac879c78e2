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

#include "x2ds/selftest.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "x2ds/privacy_audit.hpp"
#include "x2ds/randomness.hpp"
#include "x2ds/share_container.hpp"

namespace x2ds {

SelftestFixture default_selftest_fixture() {
  SelftestFixture f;
  f.secret = BitString::parse("1001");
  const char* pads[] = {"11", "01", "10", "00", "01", "11", "10", "01"};
  for (int k = 1; k <= 8; ++k) f.pads.at(k) = BitString::parse(pads[k - 1]);
  const char* cells[3][3] = {
      {"1110", "1001", "1110"},
      {"1000", "0011", "0101"},
      {"0001", "1000", "1000"},
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) f.expected[i][j] = BitString::parse(cells[i][j]);
  }
  f.failure = FailurePattern(1, 1);
  // Share 1110 at (1,1) of a 4-bit secret.
  f.golden_share_bytes = {
      'X', '2', 'D', 'S',                // magic
      0x01, 0x01, 0x01,                  // version, i, j
      0, 0, 0, 0, 0, 0, 0, 0x04,         // original length (bits)
      0, 0, 0, 0, 0, 0, 0, 0x04,         // payload length (bits)
      0xE0,                              // 1110 0000
  };
  return f;
}

bool SelftestResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string SelftestResult::summary() const {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
    ok += c.passed ? 1 : 0;
  }
  os << "selftest: " << ok << '/' << checks.size() << " checks passed\n";
  return os.str();
}

SelftestResult run_selftest(const SelftestFixture& fixture) {
  SelftestResult result;
  auto run = [&](const std::string& name, auto&& body) {
    SelftestCheck check{name, false, {}};
    try {
      check.detail = body();
      check.passed = check.detail.empty();
    } catch (const std::exception& e) {
      check.detail = std::string("exception: ") + e.what();
    }
    result.checks.push_back(std::move(check));
  };

  run("worked example matrix", [&]() -> std::string {
    const ShareMatrix m = encode_secret(fixture.secret, fixture.pads);
    std::string mismatches;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        const BitString& want = fixture.expected[i - 1][j - 1];
        if (m.at(i, j) != want) {
          mismatches += (mismatches.empty() ? "" : "; ") + std::string("m[") +
                        std::to_string(i) + "][" + std::to_string(j) + "] expected " +
                        want.to_string() + " got " + m.at(i, j).to_string();
        }
      }
    }
    return mismatches;
  });

  run("worked example closed form", [&]() -> std::string {
    const auto split = split_secret(fixture.secret);
    return enc2(split.padded, fixture.pads) == enc2_closed_form(split.padded, fixture.pads)
               ? ""
               : "composed and closed-form encodings differ";
  });

  run("worked example decode " + to_string(fixture.failure), [&]() -> std::string {
    ShareMatrix m(fixture.secret.size());
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) m.at(i, j) = fixture.expected[i - 1][j - 1];
    }
    const BitString got =
        dec2(build_decoding_set(m, fixture.failure), fixture.failure, fixture.secret.size());
    return got == fixture.secret ? "" : "decoded " + got.to_string();
  });

  run("share file golden bytes", [&]() -> std::string {
    const auto bytes = write_share(fixture.expected[0][0], Position(1, 1), fixture.secret.size());
    if (bytes != fixture.golden_share_bytes) return "encoded bytes differ from the golden image";
    const ShareRecord rec = read_share(fixture.golden_share_bytes);
    if (rec.share != fixture.expected[0][0] || rec.position != Position(1, 1) ||
        rec.original_length != fixture.secret.size()) {
      return "golden image does not parse back to m[1][1]";
    }
    return "";
  });

  run("exhaustive 2-bit availability", [&]() -> std::string {
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
    return ok == total ? "" : std::to_string(ok) + "/" + std::to_string(total) + " recovered";
  });

  run("exhaustive 2-bit privacy", [&]() -> std::string {
    AuditOptions options;
    options.secret_bits = 2;
    const AuditReport report = audit_all_cases(options);
    if (report.passed()) return "";
    std::string failing;
    for (const auto& c : report.cases) {
      if (!c.passed) failing += " case " + std::to_string(c.case_no);
    }
    if (!report.full_matrix_passed) failing += " full-matrix control";
    for (const auto& s : report.one_layer) {
      if (!s.passed) failing += " one-layer " + s.label;
    }
    if (!report.pad_entropy_passed) failing += " pad entropy";
    return "failing:" + failing;
  });

  return result;
}

}  // namespace x2ds
