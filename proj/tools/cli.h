// Copyright 2026 The dihquiver Authors
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

#ifndef DIHQUIVER_TOOLS_CLI_H_
#define DIHQUIVER_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace dihquiver::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kBadLinkSyntax = 3,
  kDenominatorTooLarge = 4,
  kNotCoprime = 5,
  kNonPositiveEntry = 6,
  kTooLarge = 7,
  kOutputError = 8,
  kInternalError = 70,
};

// Runs one command. args excludes the program name. Table output is
// colorized only when color is true and the report goes to out (not --out).
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool color = false);

}  // namespace dihquiver::cli

#endif  // DIHQUIVER_TOOLS_CLI_H_
