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

#include "dbe/ske.h"

#include "dbe/status.h"

namespace dbe {

namespace {

absl::StatusOr<SkeBlock> Xor(const SymmetricKey& key,
                             std::span<const uint8_t> in) {
  if (in.size() != key.bytes.size()) {
    return MakeError(ErrorCode::kLengthMismatch,
                     "ske: input must be exactly 256 bits");
  }
  SkeBlock out;
  for (size_t i = 0; i < out.size(); ++i) out[i] = key.bytes[i] ^ in[i];
  return out;
}

}  // namespace

SymmetricKey SkeGenKey(RandomSource& rng) {
  SymmetricKey k;
  rng.Fill(k.bytes);
  return k;
}

absl::StatusOr<SkeBlock> SkeEncrypt(const SymmetricKey& key,
                                    std::span<const uint8_t> message) {
  return Xor(key, message);
}

absl::StatusOr<SkeBlock> SkeDecrypt(const SymmetricKey& key,
                                    std::span<const uint8_t> ciphertext) {
  return Xor(key, ciphertext);
}

}  // namespace dbe
