// Copyright 2026 The ulc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ULC_TOOLS_CLI_H_
#define ULC_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ulc::cli {

enum ExitStatus : int {
  kSuccess = 0,    // property holds
  kViolation = 1,  // violation or verification failure; witness written
  kUsage = 2,      // malformed input, missing file, bad flags
};

// Runs the command line `args` (without the program name). Human-readable
// results go to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ulc::cli

#endif  // ULC_TOOLS_CLI_H_
