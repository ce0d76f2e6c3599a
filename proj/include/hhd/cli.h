// Copyright 2026 The hhd Authors.
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

#ifndef HHD_CLI_H_
#define HHD_CLI_H_

#include <iosfwd>
#include <memory>

#include "hhd/backend.h"
#include "hhd/config.h"

namespace hhd {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitBackend = 3;

// Entry point of the `hhd` tool. Subcommands: score, eval, tune-threshold,
// augment, adapt, emit-train, features, baseline, mock-serve.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

// The mock when cfg.use_mock or a fixture is set, the HTTP client when a URL
// is set. Throws kInvalidArgument when neither is configured.
std::unique_ptr<Backend> MakeBackend(const CliConfig& cfg);

int ExitCodeFor(const class Error& error);

}  // namespace hhd

#endif  // HHD_CLI_H_
