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

#include "dbe/hashes.h"

#include "absl/strings/escaping.h"
#include "absl/strings/string_view.h"
#include "dbe/shake.h"

namespace dbe {

namespace {

void AppendFramed(std::vector<uint8_t>& out, std::span<const uint8_t> data) {
  const uint64_t len = data.size();
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<uint8_t>(len >> (8 * i)));
  out.insert(out.end(), data.begin(), data.end());
}

}  // namespace

std::string SessionKey::Hex() const {
  return absl::BytesToHexString(absl::string_view(
      reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::vector<uint8_t> H1Preimage(const G2Element& element,
                                std::span<const uint8_t> aux) {
  std::vector<uint8_t> pre;
  pre.reserve(3 * 8 + HashSuite::kTagH1.size() + G2Element::kBytes + aux.size());
  AppendFramed(pre, AsBytes(HashSuite::kTagH1));
  AppendFramed(pre, element.ToBytes());
  AppendFramed(pre, aux);
  return pre;
}

Scalar H1(const G2Element& element, std::span<const uint8_t> aux) {
  std::vector<uint8_t> pre = H1Preimage(element, aux);
  std::array<uint8_t, HashSuite::kWideBytes> wide;
  Shake256 xof;
  xof.Absorb(pre);
  xof.Squeeze(wide);
  return Scalar::FromBytesWide(wide);
}

SessionKey H2(const GtElement& k) {
  std::vector<uint8_t> pre;
  AppendFramed(pre, AsBytes(HashSuite::kTagH2));
  AppendFramed(pre, k.ToBytes());
  SessionKey out;
  Shake256 xof;
  xof.Absorb(pre);
  xof.Squeeze(out.bytes);
  return out;
}

Scalar HashToScalar(std::string_view tag, std::span<const uint8_t> message) {
  std::vector<uint8_t> pre;
  AppendFramed(pre, AsBytes(tag));
  AppendFramed(pre, message);
  std::array<uint8_t, HashSuite::kWideBytes> wide;
  Shake256 xof;
  xof.Absorb(pre);
  xof.Squeeze(wide);
  return Scalar::FromBytesWide(wide);
}

}  // namespace dbe
