// Copyright 2026 The dctsteg Authors.
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

#ifndef DCTSTEG_CLI_HPP_
#define DCTSTEG_CLI_HPP_

#include <ostream>

namespace dctsteg {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitTooLarge = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitCorrupt = 4;

// Runs one command. Results go to `out` as key=value lines, diagnostics to
// `err` as a single line.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dctsteg

#endif  // DCTSTEG_CLI_HPP_
