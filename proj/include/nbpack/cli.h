// Copyright 2026 The nbpack Authors
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

#ifndef NBPACK_CLI_H_
#define NBPACK_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace nbpack {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformedInput = 2;
inline constexpr int kExitInfeasibleConfig = 3;
inline constexpr int kExitSizeGuard = 4;

// Runs one command (args excludes the program name). JSON results go to
// `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace nbpack

#endif  // NBPACK_CLI_H_
