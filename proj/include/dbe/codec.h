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

// Canonical, versioned byte formats.
//
// Every object is wrapped as "DBE1" || kind || version || body. Integers are
// big-endian u32; group elements use their compressed encodings and are
// membership-checked on decode; index maps are a u32 count followed by
// (u32 index, element) pairs in strictly ascending index order.
//
//   PP      L, A, A^, B, B_k, Omega
//   UPK_SS  L, i, V, V^, V_k
//   USK_SS  L, i, K
//   CH_SS   C^_1, C_2
//   UPK_AD  L, i, UPK_SS body (slot 2i), UPK_SS body (slot 2i-1)
//   USK_AD  L, i, u, USK_SS body
//   CH_AD   CM body, sigma, VK
//   OTS_VK  X
//
// The CM body is CH_SS body x2, CT_0, CT_1, u32 |z|, then z packed MSB-first
// into ceil(|z|/8) bytes with zero padding. The signed CM preimage prefixes
// the CM body with "DBE-CM" and the format version.

#ifndef DBE_CODEC_H_
#define DBE_CODEC_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "dbe/dbe_ad.h"
#include "dbe/dbe_ss.h"
#include "dbe/ots.h"

namespace dbe::codec {

inline constexpr std::array<uint8_t, 4> kMagic = {'D', 'B', 'E', '1'};
inline constexpr uint8_t kVersion = 0x01;
inline constexpr size_t kEnvelopeBytes = 6;
inline constexpr std::string_view kCmDomain = "DBE-CM";

enum class Kind : uint8_t {
  kPublicParams = 0x01,
  kSsPublicKey = 0x02,
  kSsSecretKey = 0x03,
  kSsHeader = 0x04,
  kAdPublicKey = 0x05,
  kAdSecretKey = 0x06,
  kAdHeader = 0x07,
  kOtsVerificationKey = 0x08,
};

std::string_view KindName(Kind kind);
bool IsSecretKind(Kind kind);

// Validates magic, kind and version without decoding the body.
absl::StatusOr<Kind> PeekKind(std::span<const uint8_t> bytes);

std::vector<uint8_t> Encode(const ss::PublicParams& pp);
std::vector<uint8_t> Encode(const ss::UserPublicKey& upk);
std::vector<uint8_t> Encode(const ss::UserSecretKey& usk);
std::vector<uint8_t> Encode(const ss::Header& ch);
std::vector<uint8_t> Encode(const ad::UserPublicKey& upk);
std::vector<uint8_t> Encode(const ad::UserSecretKey& usk);
std::vector<uint8_t> Encode(const ad::Header& ch);
std::vector<uint8_t> Encode(const OtsVerificationKey& vk);

absl::StatusOr<ss::PublicParams> DecodePublicParams(
    std::span<const uint8_t> bytes);
absl::StatusOr<ss::UserPublicKey> DecodeSsPublicKey(
    std::span<const uint8_t> bytes);
absl::StatusOr<ss::UserSecretKey> DecodeSsSecretKey(
    std::span<const uint8_t> bytes);
absl::StatusOr<ss::Header> DecodeSsHeader(std::span<const uint8_t> bytes);
absl::StatusOr<ad::UserPublicKey> DecodeAdPublicKey(
    std::span<const uint8_t> bytes);
absl::StatusOr<ad::UserSecretKey> DecodeAdSecretKey(
    std::span<const uint8_t> bytes);
absl::StatusOr<ad::Header> DecodeAdHeader(std::span<const uint8_t> bytes);
absl::StatusOr<OtsVerificationKey> DecodeOtsVerificationKey(
    std::span<const uint8_t> bytes);

// Signing input for the adaptive header's one-time signature.
std::vector<uint8_t> CmPreimage(const ad::CipherMessage& cm);

}  // namespace dbe::codec

#endif  // DBE_CODEC_H_
