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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace x2ds::cli {

// Process exit codes. Reports go to `out`, diagnostics to `err`.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,         // simulate / audit / selftest found a failure
  kIoError = 2,
  kInsecureRefused = 3,     // --seed without insecure test mode
  kInsufficientShares = 4,
  kInconsistentShares = 5,  // disagreeing, corrupt, or digest-mismatched shares
  kUsage = 64,
};

// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace x2ds::cli
