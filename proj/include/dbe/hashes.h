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

// Domain-separated hashes built on SHAKE256.
//
//   H1 : G^ x bytes -> Z_r   (ciphertext tag)
//   H2 : GT -> {0,1}^256     (session-key derivation)
//
// Every input is framed as be64(len) || bytes, so distinct argument tuples
// never share a preimage. H1 squeezes 512 bits before reducing mod r, leaving
// a statistical bias below 2^-256.

#ifndef DBE_HASHES_H_
#define DBE_HASHES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dbe/groups.h"

namespace dbe {

struct HashSuite {
  static constexpr size_t kLambdaBits = 256;
  static constexpr size_t kLambdaBytes = kLambdaBits / 8;
  static constexpr size_t kWideBytes = 64;
  static constexpr std::string_view kTagH1 = "DBE-v1/H1/G2xAU->Zr";
  static constexpr std::string_view kTagH2 = "DBE-v1/H2/GT->K256";
};

// A lambda-bit key produced by encapsulation.
struct SessionKey {
  std::array<uint8_t, HashSuite::kLambdaBytes> bytes{};

  friend bool operator==(const SessionKey&, const SessionKey&) = default;
  std::string Hex() const;
};

// tag || element || aux framing used by H1; exposed for injectivity tests.
std::vector<uint8_t> H1Preimage(const G2Element& element,
                                std::span<const uint8_t> aux);

Scalar H1(const G2Element& element, std::span<const uint8_t> aux);

SessionKey H2(const GtElement& k);

// Length-framed hash of (tag, message) into Z_r with the same bias bound as
// H1. Used for the one-time signature message digest.
Scalar HashToScalar(std::string_view tag, std::span<const uint8_t> message);

inline std::span<const uint8_t> AsBytes(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

}  // namespace dbe

#endif  // DBE_HASHES_H_
