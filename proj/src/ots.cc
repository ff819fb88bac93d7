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

#include "dbe/ots.h"

#include "dbe/hashes.h"
#include "dbe/status.h"

namespace dbe {

std::pair<OtsSigningKey, OtsVerificationKey> OtsGenKey(RandomSource& rng) {
  OtsSigningKey sk{Scalar::RandomNonZero(rng)};
  OtsVerificationKey vk{G2Element::Generator().Pow(sk.x)};
  return {sk, vk};
}

absl::StatusOr<OtsSignature> OtsSign(const OtsSigningKey& sk,
                                     std::span<const uint8_t> message) {
  Scalar denom = sk.x + HashToScalar(kOtsHashTag, message);
  if (denom.IsZero()) {
    return MakeError(ErrorCode::kUnsignableKey,
                     "ots: x + h(m) = 0, regenerate the key");
  }
  Scalar inv = denom.Inverse();
  OtsSignature sig{G1Element::Generator().Pow(inv)};
  denom.Wipe();
  inv.Wipe();
  return sig;
}

bool OtsVerify(const OtsVerificationKey& vk, const OtsSignature& sig,
               std::span<const uint8_t> message) {
  if (vk.X.IsIdentity() || sig.sigma.IsIdentity()) return false;
  const GroupContext& ctx = GroupContext::Get();
  Scalar h = HashToScalar(kOtsHashTag, message);
  G2Element rhs = vk.X * ctx.g_hat.Pow(h);
  return Pairing(sig.sigma, rhs) == ctx.gt_generator;
}

}  // namespace dbe
