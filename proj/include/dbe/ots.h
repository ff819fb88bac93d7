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

// Boneh-Boyen style one-time signature: sigma = g^{1/(x + h(m))}, checked as
// e(sigma, X * g^^h) == e(g, g^). Signing is deterministic, so each message
// has exactly one valid signature.

#ifndef DBE_OTS_H_
#define DBE_OTS_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

#include "absl/status/statusor.h"
#include "dbe/groups.h"
#include "dbe/random.h"

namespace dbe {

inline constexpr std::string_view kOtsHashTag = "DBE-v1/OTS/msg->Zr";

struct OtsSigningKey {
  Scalar x;
  void Wipe() { x.Wipe(); }
};

struct OtsVerificationKey {
  G2Element X;
  friend bool operator==(const OtsVerificationKey&,
                         const OtsVerificationKey&) = default;
};

struct OtsSignature {
  G1Element sigma;
  friend bool operator==(const OtsSignature&, const OtsSignature&) = default;
};

std::pair<OtsSigningKey, OtsVerificationKey> OtsGenKey(RandomSource& rng);

// kUnsignableKey when x + h(m) = 0 mod r.
absl::StatusOr<OtsSignature> OtsSign(const OtsSigningKey& sk,
                                     std::span<const uint8_t> message);

// One pairing; the right-hand side comes from GroupContext.
bool OtsVerify(const OtsVerificationKey& vk, const OtsSignature& sig,
               std::span<const uint8_t> message);

}  // namespace dbe

#endif  // DBE_OTS_H_
