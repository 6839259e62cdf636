// Copyright 2026 The swissrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWISSRANK_CLI_COMMANDS_H_
#define SWISSRANK_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace swissrank::cli {

// Runs one command line; `args` excludes the program name. Reports go to
// `out` (or --out), warnings and the one-line diagnostic to `err`.
// Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Fixed six-decimal rendering used by every report.
std::string format_real(double value);

}  // namespace swissrank::cli

#endif  // SWISSRANK_CLI_COMMANDS_H_
