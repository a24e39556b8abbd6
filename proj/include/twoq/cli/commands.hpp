// Copyright 2026 The twoq Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twoq::cli {

// Process exit codes. Input problems and verification failures never share
// a code.
enum class ExitCode : int {
  ok = 0,
  verification_failed = 1,
  usage = 2,
  parse_error = 3,
  non_unitary = 4,
  not_entangling = 5,
  domain_error = 6,
  internal = 7,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twoq::cli
