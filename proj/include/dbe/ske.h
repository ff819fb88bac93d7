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

// One-time pad over fixed 256-bit blocks. A fresh key wraps exactly one
// 256-bit message, which is all the adaptive scheme needs.

#ifndef DBE_SKE_H_
#define DBE_SKE_H_

#include <array>
#include <cstdint>
#include <span>

#include "absl/status/statusor.h"
#include "dbe/hashes.h"
#include "dbe/random.h"

namespace dbe {

using SkeBlock = std::array<uint8_t, HashSuite::kLambdaBytes>;

struct SymmetricKey {
  SkeBlock bytes{};
  friend bool operator==(const SymmetricKey&, const SymmetricKey&) = default;
};

SymmetricKey SkeGenKey(RandomSource& rng);

// c = k XOR m; kLengthMismatch unless |m| = 256 bits.
absl::StatusOr<SkeBlock> SkeEncrypt(const SymmetricKey& key,
                                    std::span<const uint8_t> message);
absl::StatusOr<SkeBlock> SkeDecrypt(const SymmetricKey& key,
                                    std::span<const uint8_t> ciphertext);

}  // namespace dbe

#endif  // DBE_SKE_H_
