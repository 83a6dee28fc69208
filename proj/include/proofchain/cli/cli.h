// Copyright 2026 The Proofchain Authors.
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

#ifndef PROOFCHAIN_CLI_CLI_H_
#define PROOFCHAIN_CLI_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace proofchain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. `args` excludes the program name. `profile_env` is
// the value of PROOFCHAIN_PROFILE, if set; --profile overrides it.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err,
            const std::optional<std::string>& profile_env = std::nullopt);

}  // namespace proofchain::cli

#endif  // PROOFCHAIN_CLI_CLI_H_
