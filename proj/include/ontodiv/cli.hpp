// Copyright 2026 The ontodiv Authors
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

#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace ontodiv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

/// Routes the default spdlog logger to standard error.
void log_to_stderr();

/// Prints the error and maps it to an exit status: InputError and
/// std::invalid_argument are user errors, anything else is internal.
int exit_status_for(std::exception_ptr error, std::ostream& err);

/// Runs `ontodiv <args...>` (args excludes the program name) and returns
/// the exit status. Machine output goes to `out`, messages to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontodiv
