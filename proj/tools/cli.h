// Copyright 2026 The rspin Authors
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


#ifndef RSPIN_TOOLS_CLI_H
#define RSPIN_TOOLS_CLI_H

#include <iosfwd>
#include <string_view>
#include <vector>

namespace rspin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Parses `lo:hi:log|lin:points`, or a single number for a one-point grid.
/// Throws std::invalid_argument on malformed input.
std::vector<double> parse_sigma_grid(std::string_view text);

/// Entry point shared by the executable and the tests. argv[0] is the program
/// name.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace rspin::cli

#endif
