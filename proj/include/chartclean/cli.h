// Copyright 2026 The chartclean Authors.
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

// The chartclean command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 backend error.
// Every subcommand except `stats` (without --out) writes a run manifest
// (docs/manifest.schema.json) next to its outputs. Outputs are staged and only
// moved into place when the whole run succeeds; on failure the manifest is
// written with status "failed" and nothing else is left behind.
//
// Remote backend defaults come from the environment and are overridden by
// flags:
//   CHARTCLEAN_BACKEND_URL      base URL, e.g. http://127.0.0.1:8080
//   CHARTCLEAN_BACKEND_TIMEOUT  per-request timeout in seconds
//   CHARTCLEAN_BACKEND_RETRIES  retries after the first attempt

#ifndef CHARTCLEAN_CLI_H_
#define CHARTCLEAN_CLI_H_

#include <string>
#include <vector>

namespace chartclean::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitBackend = 3,
};

int Run(int argc, const char* const* argv);

// Convenience for tests: `args` excludes the program name.
int Run(const std::vector<std::string>& args);

}  // namespace chartclean::cli

#endif  // CHARTCLEAN_CLI_H_
