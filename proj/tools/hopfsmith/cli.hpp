// Copyright 2026 The hopfsmith Authors
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

#ifndef HOPFSMITH_TOOLS_CLI_HPP
#define HOPFSMITH_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hopfsmith::cli {

enum ExitCode : int { holds = 0, refuted = 1, input_error = 2, internal_error = 3 };

/// Runs one command line (without the program name). The JSON report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfsmith::cli

#endif  // HOPFSMITH_TOOLS_CLI_HPP
