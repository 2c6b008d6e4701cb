// Copyright 2026 The Kirkman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KIRKMAN_TOOLS_CLI_HPP
#define KIRKMAN_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "kirkman/verifier.hpp"

namespace kirkman::cli {

enum class OutputFormat { kPretty, kCsv, kJsonLines };

/// Exit codes of the kirkman tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;

/// In-process overrides for testing the tool's failure paths.
struct CliHooks {
  /// Replaces the closed-form coefficient everywhere the tool uses it.
  CoeffSource closed_coeff;
};

/// Runs one invocation. `args` excludes the program name. Data goes to `out`,
/// diagnostics and usage text to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const CliHooks& hooks = {});

}  // namespace kirkman::cli

#endif  // KIRKMAN_TOOLS_CLI_HPP
