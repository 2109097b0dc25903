// Copyright 2026 The lgcompile Authors.
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

#ifndef LGC_TOOLS_CLI_HPP_
#define LGC_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace lgc::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kConfigError = 2,
  kInvariantError = 3,
};

// Runs one command. The argument list excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgc::cli

#endif  // LGC_TOOLS_CLI_HPP_
