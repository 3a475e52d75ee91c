// Copyright 2026 The Unital Authors
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

#ifndef UNITAL_CLI_HPP_
#define UNITAL_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace unital {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `unital` tool. args excludes the program name.
// Returns 0 on success, 1 when a checked property fails, 2 on usage or I/O
// errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unital

#endif  // UNITAL_CLI_HPP_
