// Copyright 2026 The fglog Authors.
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

#ifndef FGLOG_CLI_CLI_HPP
#define FGLOG_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fglog::cli {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitTruncation = 3;

inline constexpr int kDefaultOrder = 8;
inline constexpr int kDefaultHdeg = 8;

// Runs one invocation. `args` excludes the program name. Reads stdin from
// `in` for "--group -".
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

}  // namespace fglog::cli

#endif  // FGLOG_CLI_CLI_HPP
