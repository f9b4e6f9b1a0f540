// Copyright 2026 The cirng Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRNG_TOOLS_CLI_HPP_
#define CIRNG_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cirng::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // verification or statistical failure
inline constexpr int kUsageError = 2;   // bad flags, parse or I/O errors

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cirng::cli

#endif  // CIRNG_TOOLS_CLI_HPP_
