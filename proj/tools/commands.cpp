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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "x2ds/x2ds.hpp"

namespace x2ds::cli {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Thrown for argument values CLI11 accepts syntactically but the command
// cannot use.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EncodeArgs {
  std::string input;
  std::string output_dir;
  std::optional<std::uint64_t> seed;
  bool insecure = false;
  bool digest = false;
  bool bench = false;
};

struct DecodeArgs {
  std::vector<std::string> shares;
  std::string manifest;
  std::string output;
  bool bench = false;
};

struct SimulateArgs {
  int secret_bits = 0;
  std::size_t trials = 100;
  std::optional<std::uint64_t> seed;
  bool exhaustive = false;
  bool insecure = false;
};

struct AuditArgs {
  int secret_bits = 2;
  std::vector<std::string> cases;
  bool two_column_info = false;
  unsigned threads = 1;
};

void print_rate(std::ostream& out, const char* what, std::size_t bytes, Clock::duration elapsed) {
  const double seconds = std::chrono::duration<double>(elapsed).count();
  const double rate = seconds > 0 ? static_cast<double>(bytes) / seconds : 0.0;
  out << "bench " << what << ": " << bytes << " bytes in " << seconds << " s ("
      << static_cast<std::uint64_t>(rate) << " bytes/s)\n";
}

int do_encode(const EncodeArgs& a, std::ostream& out, std::ostream& err) {
  const ProductionGate gate = ProductionGate::from_environment(a.insecure);
  PadSource src = a.seed ? PadSource::seeded_test(*a.seed) : PadSource::secure();
  gate.admit(src);
  if (a.seed) err << "warning: seeded pads are reproducible; shares are not secret\n";

  const auto bytes = read_file_bytes(a.input);
  const BitString secret = BitString::from_bytes(bytes);
  const SplitSecret split = split_secret(secret);
  const PadSet2 pads = generate_pads2(split.padded.payload.size() / 2, src);

  const auto start = Clock::now();
  const ShareMatrix m = enc2(split.padded, pads);
  const auto elapsed = Clock::now() - start;

  std::error_code ec;
  fs::create_directories(a.output_dir, ec);
  if (ec) throw IoError("cannot create " + a.output_dir + ": " + ec.message());

  Manifest manifest;
  manifest.original_length_bits = secret.size();
  for (int i = 1; i <= kGridSize; ++i) {
    for (int j = 1; j <= kGridSize; ++j) {
      const Position pos(i, j);
      const std::string name = share_file_name(pos);
      write_share_file(fs::path(a.output_dir) / name, m.at(pos), pos, secret.size());
      manifest.shares.push_back({pos, name});
    }
  }
  if (a.digest) manifest.digest = secret_digest(secret);
  write_manifest_file(fs::path(a.output_dir) / kManifestFileName, manifest);

  out << "encoded " << bytes.size() << " bytes into 9 shares of " << m.share_length()
      << " bits in " << a.output_dir << '\n';
  if (a.bench) print_rate(out, "encode", bytes.size(), elapsed);
  return kOk;
}

int do_decode(const DecodeArgs& a, std::ostream& out, std::ostream& err) {
  ShareSet shares;
  std::optional<std::uint64_t> original_length;
  std::optional<std::string> digest;

  auto add = [&](const ShareRecord& rec, const std::string& source) {
    if (original_length && *original_length != rec.original_length) {
      throw InconsistentShares(source + " records a secret of " +
                               std::to_string(rec.original_length) + " bits, expected " +
                               std::to_string(*original_length));
    }
    original_length = rec.original_length;
    const auto [it, inserted] = shares.emplace(rec.position, rec.share);
    if (!inserted && it->second != rec.share) {
      throw InconsistentShares("two different shares supplied for position " +
                               to_string(rec.position));
    }
  };

  if (!a.manifest.empty()) {
    const Manifest manifest = read_manifest_file(a.manifest);
    original_length = manifest.original_length_bits;
    digest = manifest.digest;
    const fs::path base = fs::path(a.manifest).parent_path();
    for (const ManifestEntry& entry : manifest.shares) {
      const fs::path path = base / entry.path;
      if (!fs::exists(path)) {
        err << "note: share " << to_string(entry.position) << " not found at " << path.string()
            << ", treating it as lost\n";
        continue;
      }
      const ShareRecord rec = read_share_file(path);
      if (rec.position != entry.position) {
        throw InconsistentShares(path.string() + " holds share " + to_string(rec.position) +
                                 " but the manifest lists it as " + to_string(entry.position));
      }
      add(rec, path.string());
    }
  } else {
    for (const std::string& path : a.shares) add(read_share_file(path), path);
  }

  if (!original_length) {
    throw InsufficientShares("insufficient shares: none supplied", {});
  }

  const auto start = Clock::now();
  const Reconstruction rec = decode_available(shares, *original_length);
  const auto elapsed = Clock::now() - start;

  if (digest && secret_digest(rec.secret) != *digest) {
    throw InconsistentShares("decoded secret does not match the manifest digest");
  }
  write_file_bytes(a.output, rec.secret.bytes());

  out << "decoded " << rec.secret.bytes().size() << " bytes from " << shares.size()
      << " shares; tolerated pattern (r,c) = " << to_string(rec.tolerated)
      << " (route " << rec.tolerated.route << " and base station " << rec.tolerated.bs
      << " not needed)";
  if (!rec.verified.empty()) out << "; " << rec.verified.size() << " redundant shares verified";
  out << '\n';
  if (a.bench) print_rate(out, "decode", rec.secret.bytes().size(), elapsed);
  return kOk;
}

int do_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.secret_bits < 0 || a.secret_bits % 2 != 0) throw UsageError("secret bits must be even");
  PadSource src = a.seed ? PadSource::seeded_test(*a.seed) : PadSource::secure();

  CampaignOptions options;
  options.secret_bits = a.secret_bits;
  options.trials = a.trials;
  options.exhaustive = a.exhaustive;
  try {
    const CampaignReport report = run_campaign(options, src);
    out << format_campaign(report);
    return report.patterns_recovered() == report.rows.size() ? kOk : kCheckFailed;
  } catch (const CampaignFailure& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

FailurePattern parse_case(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("case must be written r,c (got '" + text + "')");
  try {
    std::size_t used = 0;
    const int r = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const int c = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return FailurePattern(r, c);
  } catch (const std::logic_error&) {
    throw UsageError("case must be r,c with r and c in 1..3 (got '" + text + "')");
  }
}

int do_audit(const AuditArgs& a, std::ostream& out, std::ostream&) {
  if (a.secret_bits % 2 != 0) throw UsageError("secret bits must be even");
  if (a.secret_bits < 2 || a.secret_bits > kMaxTwoLayerAuditBits) {
    throw UsageError("exhaustive audit supports secret bits 2 or 4 only (requested " +
                     std::to_string(a.secret_bits) + "): the enumeration grows as 2^(5n)");
  }
  AuditOptions options;
  options.secret_bits = a.secret_bits;
  options.two_column_info = a.two_column_info;
  options.threads = a.threads;
  for (const std::string& c : a.cases) {
    const FailurePattern p = parse_case(c);
    if (std::find(options.patterns.begin(), options.patterns.end(), p) == options.patterns.end()) {
      options.patterns.push_back(p);
    }
  }
  const AuditReport report = audit_all_cases(options);
  out << format_report(report);
  return report.passed() ? kOk : kCheckFailed;
}

int do_selftest(std::ostream& out) {
  const SelftestResult result = run_selftest();
  out << result.summary();
  return result.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-dimensional XOR secret sharing over a 3x3 base-station/route grid", "x2ds"};
  app.require_subcommand(1);

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Split a file into nine shares plus a manifest");
  encode->add_option("input", enc.input, "File to encode")->required();
  encode->add_option("-o,--output", enc.output_dir, "Directory for shares and manifest")->required();
  encode->add_option("--seed", enc.seed, "Seeded pads (needs insecure test mode)");
  encode->add_flag("--insecure-test-mode", enc.insecure, "Allow seeded pads");
  encode->add_flag("--digest", enc.digest, "Store a SHA-256 digest of the input in the manifest");
  encode->add_flag("--bench", enc.bench, "Print encode throughput");

  DecodeArgs dec;
  auto* decode = app.add_subcommand("decode", "Rebuild a file from surviving shares");
  auto* share_opt = decode->add_option("shares", dec.shares, "Share files");
  auto* manifest_opt = decode->add_option("-m,--manifest", dec.manifest, "Manifest file");
  share_opt->excludes(manifest_opt);
  decode->add_option("-o,--output", dec.output, "Output file")->required();
  decode->add_flag("--bench", dec.bench, "Print decode throughput");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run the 9x9 jam/observe campaign");
  simulate->add_option("--secret-bits", sim.secret_bits, "Secret width in bits")->required();
  auto* trials_opt = simulate->add_option("--trials", sim.trials, "Random trials per pattern pair");
  auto* seed_opt = simulate->add_option("--seed", sim.seed, "Seed for reproducible runs");
  auto* exhaustive_opt =
      simulate->add_flag("--exhaustive", sim.exhaustive, "Enumerate every secret and pad");
  exhaustive_opt->excludes(trials_opt)->excludes(seed_opt);
  simulate->add_flag("--insecure-test-mode", sim.insecure, "Accepted for symmetry with encode");

  AuditArgs aud;
  auto* audit = app.add_subcommand("audit", "Exhaustive mutual-information audit");
  audit->add_option("--secret-bits", aud.secret_bits, "Secret width in bits (2 or 4)");
  audit->add_option("--cases", aud.cases, "Restrict to patterns r,c (repeatable)");
  audit->add_flag("--two-column-info", aud.two_column_info,
                  "Also print MI for observing two base stations");
  audit->add_option("--threads", aud.threads, "Worker threads")->check(CLI::Range(1U, 256U));

  auto* selftest = app.add_subcommand("selftest", "Run embedded golden and exhaustive checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (encode->parsed()) return do_encode(enc, out, err);
    if (decode->parsed()) {
      if (dec.shares.empty() && dec.manifest.empty()) {
        throw UsageError("decode needs share files or --manifest");
      }
      return do_decode(dec, out, err);
    }
    if (simulate->parsed()) return do_simulate(sim, out, err);
    if (audit->parsed()) return do_audit(aud, out, err);
    if (selftest->parsed()) return do_selftest(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const TractabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InsecureSourceRefused& e) {
    err << "error: " << e.what() << '\n';
    return kInsecureRefused;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InsufficientShares& e) {
    err << "error: " << e.what() << '\n';
    return kInsufficientShares;
  } catch (const InconsistentShares& e) {
    err << "error: " << e.what() << '\n';
    return kInconsistentShares;
  } catch (const ShareFormatError& e) {
    err << "error: corrupt share: " << e.what() << '\n';
    return kInconsistentShares;
  } catch (const EntropySourceError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}

}  // namespace x2ds::cli
