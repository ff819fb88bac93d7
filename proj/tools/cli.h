/*
 * Copyright 2026 The DBE Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// The `dbe` command-line tool. Every command is a thin wrapper over the
// library: it loads objects from a key directory, makes one library call and
// writes the result.

#ifndef DBE_TOOLS_CLI_H_
#define DBE_TOOLS_CLI_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dbe/dbe_ss.h"

namespace dbe::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitKeyInvalid = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitExists = 4,
  kExitDecode = 5,
  kExitBadArgument = 6,
  kExitMissing = 7,
  kExitStoredKeyInvalid = 8,
  kExitNotInSet = 10,
  kExitInvalidHeader = 11,
  kExitBadSignature = 12,
  kExitMalformedHeader = 13,
  kExitTamperFailed = 14,
  kExitInternal = 70,
};

// Human-readable exit-code table, also shown by --help.
std::string ExitCodeTable();

int ExitCodeFor(const absl::Status& status);
int ExitCodeFor(Rejection rejection);

// "1,3,4" -> {1, 3, 4}. Rejects empty entries, non-numbers and duplicates.
absl::StatusOr<IndexSet> ParseIndexSet(std::string_view text);

// DRBG seed for one seeded command invocation, so different commands and
// indices never share a random stream: be64(len) || "dbe/cli/<command>" ||
// be32(index) || seed.
std::vector<uint8_t> CommandSeed(std::span<const uint8_t> seed,
                                 std::string_view command, Index index);

// Runs the tool; `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dbe::cli

#endif  // DBE_TOOLS_CLI_H_
